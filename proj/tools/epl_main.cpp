// epl: load an evidence network from a quad file, infer new evidence with
// the built-in syllogisms or a rule file, and report truth values.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "epl/quads.hpp"
#include "epl/rules.hpp"
#include "epl/syllogisms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitEval = 3;

epl::SyllogismKind parse_op(const std::string& name) {
    if (name == "deduce") return epl::SyllogismKind::deduction;
    if (name == "induce") return epl::SyllogismKind::induction;
    if (name == "abduce") return epl::SyllogismKind::abduction;
    if (name == "exemplify") return epl::SyllogismKind::exemplification;
    throw CLI::ValidationError("--op",
                               "expected deduce, induce, abduce or exemplify");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw epl::QuadFormatError(path, 0, "cannot open file for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inferred entries print as header-less quad records in canonical order.
void print_entries(const epl::EvidenceNetwork& net, const std::string& label,
                   const epl::EvidenceMatrix& m) {
    struct Line {
        std::string subject, object;
        epl::EvidenceTuple value;
    };
    std::vector<Line> lines;
    m.for_each([&](std::size_t i, std::size_t j, epl::EvidenceTuple v) {
        lines.push_back(Line{net.vertex_name(i), net.vertex_name(j), v});
    });
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.subject, a.object) < std::tie(b.subject, b.object);
    });
    for (const Line& l : lines)
        std::cout << l.subject << '\t' << label << '\t' << l.object << '\t'
                  << epl::format_weight(l.value.positive) << '\t'
                  << epl::format_weight(l.value.negative) << '\n';
}

int cmd_infer(const std::string& input, const std::string& op,
              const std::string& label, bool apply,
              const std::optional<std::string>& output) {
    epl::EvidenceNetwork net = epl::load_quads(input);
    epl::InferenceResult result = epl::infer(net, parse_op(op), label);
    print_entries(net, label, result.inferred);
    if (apply) epl::apply(net, result);
    if (output) epl::save_quads(net, *output);
    return kExitOk;
}

int cmd_run(const std::string& input, const std::string& rules_path, int steps,
            const std::string& output) {
    epl::EvidenceNetwork net = epl::load_quads(input);
    epl::RuleProgram program;
    try {
        program = epl::parse_rules(read_file(rules_path));
    } catch (const epl::ParseError& e) {
        std::cerr << "epl: " << rules_path << ": " << e.what() << '\n';
        return kExitFormat;
    }
    epl::run(program, net, steps);
    epl::save_quads(net, output);
    return kExitOk;
}

int cmd_truth(const std::string& input, double k) {
    std::cout << epl::truth_report(epl::load_quads(input), k);
    return kExitOk;
}

int cmd_query(const std::string& input, const std::string& subject,
              const std::string& predicate, const std::string& object,
              double k) {
    epl::EvidenceNetwork net = epl::load_quads(input);
    epl::EvidenceTuple e;
    const auto s = net.find_vertex(subject);
    const auto o = net.find_vertex(object);
    if (s && o) e = net.slice(predicate).at(*s, *o);
    const epl::TruthValue tv = epl::truth_value(e, k);
    char fc[64];
    if (tv.frequency)
        std::snprintf(fc, sizeof fc, "f=%.6f c=%.6f", *tv.frequency,
                      tv.confidence);
    else
        std::snprintf(fc, sizeof fc, "f=undef c=%.6f", tv.confidence);
    std::cout << '<' << epl::format_weight(e.positive) << ','
              << epl::format_weight(e.negative) << "> " << fc << '\n';
    return kExitOk;
}

int cmd_export(const std::string& input, const std::string& output) {
    epl::save_quads(epl::load_quads(input), output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evidential path logic over multi-relational networks"};
    app.require_subcommand(1);

    std::string input, output, label, op, rules_path;
    std::string subject, predicate, object;
    std::optional<std::string> opt_output;
    bool apply = false;
    int steps = 1;
    double k = epl::kDefaultEvidenceConstant;

    CLI::App* infer = app.add_subcommand(
        "infer", "apply one syllogism to a predicate slice");
    infer->add_option("--input", input, "input quad file")->required();
    infer->add_option("--op", op, "deduce|induce|abduce|exemplify")->required();
    infer->add_option("--label", label, "predicate label")->required();
    infer->add_flag("--apply", apply, "revise the inferred evidence into the network");
    infer->add_option("--output", opt_output, "write the resulting network");

    CLI::App* run = app.add_subcommand("run", "run a rule program");
    run->add_option("--input", input, "input quad file")->required();
    run->add_option("--rules", rules_path, "rule file")->required();
    run->add_option("--steps", steps, "number of time steps")
        ->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--output", output, "output quad file")->required();

    CLI::App* truth = app.add_subcommand("truth", "print the truth-value table");
    truth->add_option("--input", input, "input quad file")->required();
    truth->add_option("--k", k, "evidence constant k")
        ->check(CLI::NonNegativeNumber);

    CLI::App* query = app.add_subcommand("query", "print one edge's evidence");
    query->add_option("--input", input, "input quad file")->required();
    query->add_option("subject", subject)->required();
    query->add_option("predicate", predicate)->required();
    query->add_option("object", object)->required();
    query->add_option("--k", k, "evidence constant k")
        ->check(CLI::NonNegativeNumber);

    CLI::App* exp = app.add_subcommand("export", "canonicalize a quad file");
    exp->add_option("--input", input, "input quad file")->required();
    exp->add_option("--output", output, "output quad file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (infer->parsed())
            return cmd_infer(input, op, label, apply, opt_output);
        if (run->parsed()) return cmd_run(input, rules_path, steps, output);
        if (truth->parsed()) return cmd_truth(input, k);
        if (query->parsed())
            return cmd_query(input, subject, predicate, object, k);
        if (exp->parsed()) return cmd_export(input, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "epl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const epl::QuadFormatError& e) {
        std::cerr << "epl: " << e.what() << '\n';
        return kExitFormat;
    } catch (const epl::EvalError& e) {
        std::cerr << "epl: " << e.what() << '\n';
        return kExitEval;
    } catch (const std::invalid_argument& e) {
        std::cerr << "epl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "epl: " << e.what() << '\n';
        return kExitFormat;
    }
    return kExitUsage;
}
