#include "epl/syllogisms.hpp"

#include <stdexcept>

namespace epl {

namespace {

// A A^ and A^ A put self-evidence (i,i) on every vertex with any edge;
// those cells say nothing new and are removed.
EvidenceMatrix drop_diagonal(EvidenceMatrix m) {
    for (std::size_t i = 0; i < m.dim(); ++i) m.set(i, i, kNoEvidence);
    return m;
}

}  // namespace

const char* to_string(SyllogismKind kind) {
    switch (kind) {
        case SyllogismKind::deduction: return "deduction";
        case SyllogismKind::induction: return "induction";
        case SyllogismKind::abduction: return "abduction";
        case SyllogismKind::exemplification: return "exemplification";
    }
    return "unknown";
}

InferenceResult deduce(const EvidenceNetwork& net, const std::string& label) {
    EvidenceMatrix a = net.slice(label);
    return InferenceResult{matmul(a, a), SyllogismKind::deduction, label, false};
}

InferenceResult induce(const EvidenceNetwork& net, const std::string& label) {
    EvidenceMatrix a = net.slice(label);
    return InferenceResult{drop_diagonal(matmul(a, converse_transpose(a))),
                           SyllogismKind::induction, label, true};
}

InferenceResult abduce(const EvidenceNetwork& net, const std::string& label) {
    EvidenceMatrix a = net.slice(label);
    return InferenceResult{drop_diagonal(matmul(converse_transpose(a), a)),
                           SyllogismKind::abduction, label, true};
}

InferenceResult exemplify(const EvidenceNetwork& net, const std::string& label) {
    EvidenceMatrix c = converse_transpose(net.slice(label));
    return InferenceResult{matmul(c, c), SyllogismKind::exemplification, label,
                           false};
}

InferenceResult infer(const EvidenceNetwork& net, SyllogismKind kind,
                      const std::string& label) {
    switch (kind) {
        case SyllogismKind::deduction: return deduce(net, label);
        case SyllogismKind::induction: return induce(net, label);
        case SyllogismKind::abduction: return abduce(net, label);
        case SyllogismKind::exemplification: return exemplify(net, label);
    }
    throw std::invalid_argument("infer: unknown syllogism kind");
}

void apply(EvidenceNetwork& net, const InferenceResult& result) {
    net.merge_slice(result.label, result.inferred,
                    EvidenceNetwork::MergeMode::revise);
}

}  // namespace epl
