#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epl/matrix.hpp"

namespace epl {

// A multi-relational evidence network: an interned vertex dictionary plus
// one sparse evidence matrix per predicate label, all over the same index
// space. Together the slices form the evidence tensor.
//
// Concurrency: single writer, many readers. slice() returns a snapshot
// copy that stays valid across later mutations.
class EvidenceNetwork {
public:
    enum class MergeMode { replace, revise };

    // Returns the existing id for a known name, otherwise appends a new
    // vertex; ids are dense and assigned in interning order.
    std::size_t intern_vertex(std::string_view name);

    std::optional<std::size_t> find_vertex(std::string_view name) const;
    const std::string& vertex_name(std::size_t id) const;
    std::size_t vertex_count() const { return names_.size(); }

    // Revises the (subject, object) cell of the predicate slice by
    // evidence summation. Vertices must already be interned.
    void assert_evidence(std::size_t subject, const std::string& predicate,
                         std::size_t object, EvidenceTuple evidence);

    // Snapshot of the predicate slice; an empty n x n matrix for unknown
    // labels.
    EvidenceMatrix slice(const std::string& predicate) const;

    // replace overwrites the slice, revise sums it with the existing one.
    void merge_slice(const std::string& predicate, const EvidenceMatrix& m,
                     MergeMode mode);

    // Labels with at least one stored entry, in byte order.
    std::vector<std::string> predicates() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> ids_;
    std::map<std::string, EvidenceMatrix> slices_;
};

}  // namespace epl
