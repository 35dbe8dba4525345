#include "epl/quads.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <tuple>
#include <vector>

namespace epl {

QuadFormatError::QuadFormatError(const std::string& source, std::size_t line,
                                 const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

double parse_weight(std::string_view field, const std::string& source,
                    std::size_t line_no) {
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size())
        throw QuadFormatError(source, line_no,
                              "unparsable weight '" + std::string(field) + "'");
    if (!std::isfinite(value))
        throw QuadFormatError(source, line_no, "weight must be finite");
    if (value < 0.0)
        throw QuadFormatError(source, line_no, "weight must be >= 0");
    return value;
}

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

struct SortedEntry {
    std::string predicate, subject, object;
    EvidenceTuple value;
};

// Canonical record order: (predicate, subject, object) byte comparison.
std::vector<SortedEntry> sorted_entries(const EvidenceNetwork& net) {
    std::vector<SortedEntry> entries;
    for (const std::string& predicate : net.predicates()) {
        net.slice(predicate).for_each(
            [&](std::size_t i, std::size_t j, EvidenceTuple v) {
                entries.push_back(SortedEntry{predicate, net.vertex_name(i),
                                              net.vertex_name(j), v});
            });
    }
    std::sort(entries.begin(), entries.end(),
              [](const SortedEntry& a, const SortedEntry& b) {
                  return std::tie(a.predicate, a.subject, a.object) <
                         std::tie(b.predicate, b.subject, b.object);
              });
    return entries;
}

}  // namespace

EvidenceNetwork read_quads(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line) || line != kQuadsHeader)
        throw QuadFormatError(source_name, 1,
                              "missing header '" + std::string(kQuadsHeader) + "'");
    EvidenceNetwork net;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 5)
            throw QuadFormatError(source_name, line_no,
                                  "expected 5 tab-separated columns, found " +
                                      std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty() || fields[2].empty())
            throw QuadFormatError(source_name, line_no,
                                  "subject, predicate and object must be non-empty");
        const double w_pos = parse_weight(fields[3], source_name, line_no);
        const double w_neg = parse_weight(fields[4], source_name, line_no);
        const std::size_t subject = net.intern_vertex(fields[0]);
        const std::size_t object = net.intern_vertex(fields[2]);
        net.assert_evidence(subject, std::string(fields[1]), object,
                            EvidenceTuple{w_pos, w_neg});
    }
    return net;
}

EvidenceNetwork load_quads(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw QuadFormatError(path.string(), 0, "cannot open file for reading");
    return read_quads(in, path.string());
}

std::string quads_to_string(const EvidenceNetwork& net) {
    std::string out(kQuadsHeader);
    out += '\n';
    for (const SortedEntry& l : sorted_entries(net)) {
        out += l.subject;
        out += '\t';
        out += l.predicate;
        out += '\t';
        out += l.object;
        out += '\t';
        out += format_weight(l.value.positive);
        out += '\t';
        out += format_weight(l.value.negative);
        out += '\n';
    }
    return out;
}

void save_quads(const EvidenceNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw QuadFormatError(path.string(), 0, "cannot open file for writing");
    out << quads_to_string(net);
    if (!out) throw QuadFormatError(path.string(), 0, "write failed");
}

std::string format_weight(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string truth_report(const EvidenceNetwork& net, double k) {
    std::string out = "subject\tpredicate\tobject\tw_pos\tw_neg\tf\tc\n";
    for (const SortedEntry& r : sorted_entries(net)) {
        const TruthValue tv = truth_value(r.value, k);
        out += r.subject;
        out += '\t';
        out += r.predicate;
        out += '\t';
        out += r.object;
        out += '\t';
        out += format_fixed(r.value.positive);
        out += '\t';
        out += format_fixed(r.value.negative);
        out += '\t';
        out += tv.frequency ? format_fixed(*tv.frequency) : "undef";
        out += '\t';
        out += format_fixed(tv.confidence);
        out += '\n';
    }
    return out;
}

}  // namespace epl
