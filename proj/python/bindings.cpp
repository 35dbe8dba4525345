#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "epl/quads.hpp"
#include "epl/rules.hpp"
#include "epl/syllogisms.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// PathExprPtr is shared_ptr<const PathExpr>; wrap it in a small value type
// so pybind11 does not need a const holder.
struct PyPathExpr {
    epl::PathExprPtr ptr;
};

std::string tuple_repr(const epl::EvidenceTuple& e) {
    return "EvidenceTuple(" + epl::format_weight(e.positive) + ", " +
           epl::format_weight(e.negative) + ")";
}

}  // namespace

PYBIND11_MODULE(_epl, m) {
    m.doc() = "evidential path logic over multi-relational networks";

    py::class_<epl::EvidenceTuple>(m, "EvidenceTuple")
        .def(py::init<>())
        .def(py::init<double, double>(), "positive"_a, "negative"_a)
        .def_readwrite("positive", &epl::EvidenceTuple::positive)
        .def_readwrite("negative", &epl::EvidenceTuple::negative)
        .def("is_zero", &epl::EvidenceTuple::is_zero)
        .def("is_valid", &epl::EvidenceTuple::is_valid)
        .def(py::self + py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__", &tuple_repr);

    py::class_<epl::TruthValue>(m, "TruthValue")
        .def_readonly("frequency", &epl::TruthValue::frequency)
        .def_readonly("confidence", &epl::TruthValue::confidence)
        .def("__repr__", [](const epl::TruthValue& tv) {
            std::ostringstream out;
            out << "TruthValue(f=";
            if (tv.frequency)
                out << *tv.frequency;
            else
                out << "undef";
            out << ", c=" << tv.confidence << ")";
            return out.str();
        });

    m.attr("DEFAULT_EVIDENCE_CONSTANT") = epl::kDefaultEvidenceConstant;
    m.def("truth_value", &epl::truth_value, "evidence"_a,
          "k"_a = epl::kDefaultEvidenceConstant);

    py::class_<epl::EvidenceMatrix>(m, "EvidenceMatrix")
        .def(py::init<>())
        .def(py::init<std::size_t>(), "dim"_a)
        .def_property_readonly("dim", &epl::EvidenceMatrix::dim)
        .def("entry_count", &epl::EvidenceMatrix::entry_count)
        .def("at", &epl::EvidenceMatrix::at, "row"_a, "col"_a)
        .def("set", &epl::EvidenceMatrix::set, "row"_a, "col"_a, "value"_a)
        .def("add", &epl::EvidenceMatrix::add, "row"_a, "col"_a, "value"_a)
        .def("is_indicator", &epl::EvidenceMatrix::is_indicator)
        .def("entries",
             [](const epl::EvidenceMatrix& m) {
                 py::list out;
                 m.for_each([&](std::size_t i, std::size_t j,
                                epl::EvidenceTuple v) {
                     out.append(py::make_tuple(i, j, v));
                 });
                 return out;
             })
        .def(py::self == py::self);

    m.def("matmul", &epl::matmul, "a"_a, "b"_a);
    m.def("entrywise_sum", &epl::entrywise_sum, "a"_a, "b"_a);
    m.def("hadamard", &epl::hadamard, "a"_a, "b"_a);
    m.def("transpose", &epl::transpose, "a"_a);
    m.def("converse_transpose", &epl::converse_transpose, "a"_a);
    m.def("clip", &epl::clip, "a"_a);
    m.def("not_filter", &epl::not_filter, "a"_a);
    m.def("identity", &epl::identity, "dim"_a);

    py::enum_<epl::EvidenceNetwork::MergeMode>(m, "MergeMode")
        .value("replace", epl::EvidenceNetwork::MergeMode::replace)
        .value("revise", epl::EvidenceNetwork::MergeMode::revise);

    py::class_<epl::EvidenceNetwork>(m, "EvidenceNetwork")
        .def(py::init<>())
        .def("intern_vertex", &epl::EvidenceNetwork::intern_vertex, "name"_a)
        .def("find_vertex", &epl::EvidenceNetwork::find_vertex, "name"_a)
        .def("vertex_name", &epl::EvidenceNetwork::vertex_name, "id"_a)
        .def_property_readonly("vertex_count",
                               &epl::EvidenceNetwork::vertex_count)
        .def("assert_evidence", &epl::EvidenceNetwork::assert_evidence,
             "subject"_a, "predicate"_a, "object"_a, "evidence"_a)
        .def("slice", &epl::EvidenceNetwork::slice, "predicate"_a)
        .def("merge_slice", &epl::EvidenceNetwork::merge_slice, "predicate"_a,
             "matrix"_a, "mode"_a)
        .def("predicates", &epl::EvidenceNetwork::predicates)
        .def("add",
             [](epl::EvidenceNetwork& net, const std::string& subject,
                const std::string& predicate, const std::string& object,
                epl::EvidenceTuple evidence) {
                 net.assert_evidence(net.intern_vertex(subject), predicate,
                                     net.intern_vertex(object), evidence);
             },
             "subject"_a, "predicate"_a, "object"_a, "evidence"_a,
             "intern both vertices and revise the edge");

    py::enum_<epl::SyllogismKind>(m, "SyllogismKind")
        .value("deduction", epl::SyllogismKind::deduction)
        .value("induction", epl::SyllogismKind::induction)
        .value("abduction", epl::SyllogismKind::abduction)
        .value("exemplification", epl::SyllogismKind::exemplification);

    py::class_<epl::InferenceResult>(m, "InferenceResult")
        .def_readonly("inferred", &epl::InferenceResult::inferred)
        .def_readonly("kind", &epl::InferenceResult::kind)
        .def_readonly("label", &epl::InferenceResult::label)
        .def_readonly("diagonal_dropped",
                      &epl::InferenceResult::diagonal_dropped);

    m.def("deduce", &epl::deduce, "net"_a, "label"_a);
    m.def("induce", &epl::induce, "net"_a, "label"_a);
    m.def("abduce", &epl::abduce, "net"_a, "label"_a);
    m.def("exemplify", &epl::exemplify, "net"_a, "label"_a);
    m.def("infer", &epl::infer, "net"_a, "kind"_a, "label"_a);
    m.def("apply", &epl::apply, "net"_a, "result"_a);

    py::class_<PyPathExpr>(m, "PathExpr")
        .def("__str__",
             [](const PyPathExpr& e) { return epl::to_string(*e.ptr); })
        .def("__repr__", [](const PyPathExpr& e) {
            return "<PathExpr " + epl::to_string(*e.ptr) + ">";
        });

    py::class_<epl::Rule>(m, "Rule")
        .def_readonly("target", &epl::Rule::target)
        .def_property_readonly(
            "expr", [](const epl::Rule& r) { return PyPathExpr{r.expr}; })
        .def("__repr__", [](const epl::Rule& r) {
            return "<Rule " + r.target + " <- " + epl::to_string(*r.expr) + ">";
        });

    py::class_<epl::RuleProgram>(m, "RuleProgram")
        .def_readonly("rules", &epl::RuleProgram::rules)
        .def("__len__",
             [](const epl::RuleProgram& p) { return p.rules.size(); })
        .def("__str__",
             [](const epl::RuleProgram& p) { return epl::to_string(p); });

    py::register_exception<epl::ParseError>(m, "RuleParseError",
                                            PyExc_ValueError);
    py::register_exception<epl::EvalError>(m, "EvalError", PyExc_RuntimeError);
    py::register_exception<epl::QuadFormatError>(m, "QuadFormatError",
                                                 PyExc_ValueError);

    m.def("parse_rules",
          [](const std::string& text) { return epl::parse_rules(text); },
          "text"_a);
    m.def("parse_expr",
          [](const std::string& text) {
              const epl::RuleProgram program = epl::parse_rules("x <- " + text);
              return PyPathExpr{program.rules.at(0).expr};
          },
          "text"_a, "parse a bare path expression");
    m.def("evaluate",
          [](const PyPathExpr& expr, const epl::EvidenceNetwork& net) {
              return epl::evaluate(*expr.ptr, net);
          },
          "expr"_a, "net"_a);
    m.def("step", &epl::step, "program"_a, "net"_a);
    m.def("run", &epl::run, "program"_a, "net"_a, "steps"_a);

    m.def("load_quads",
          [](const std::string& path) { return epl::load_quads(path); },
          "path"_a);
    m.def("save_quads",
          [](const epl::EvidenceNetwork& net, const std::string& path) {
              epl::save_quads(net, path);
          },
          "net"_a, "path"_a);
    m.def("quads_to_string", &epl::quads_to_string, "net"_a);
    m.def("truth_report", &epl::truth_report, "net"_a,
          "k"_a = epl::kDefaultEvidenceConstant);
}
