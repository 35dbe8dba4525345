#pragma once

#include <string>

#include "epl/network.hpp"

namespace epl {

enum class SyllogismKind { deduction, induction, abduction, exemplification };

const char* to_string(SyllogismKind kind);

// Inferred evidence for one predicate slice, ready to be revised into the
// network with apply().
struct InferenceResult {
    EvidenceMatrix inferred;
    SyllogismKind kind = SyllogismKind::deduction;
    std::string label;
    bool diagonal_dropped = false;
};

// A A: two-step walk along the slice; (i,j),(j,k) -> (i,k).
InferenceResult deduce(const EvidenceNetwork& net, const std::string& label);

// A A^: shared-object generalization; diagonal self-evidence is dropped.
InferenceResult induce(const EvidenceNetwork& net, const std::string& label);

// A^ A: shared-subject specialization; diagonal self-evidence is dropped.
InferenceResult abduce(const EvidenceNetwork& net, const std::string& label);

// A^ A^: reversed two-step walk; (i,j),(j,k) -> (k,i).
InferenceResult exemplify(const EvidenceNetwork& net, const std::string& label);

InferenceResult infer(const EvidenceNetwork& net, SyllogismKind kind,
                      const std::string& label);

// Revises the inferred evidence into the network by summation.
void apply(EvidenceNetwork& net, const InferenceResult& result);

}  // namespace epl
