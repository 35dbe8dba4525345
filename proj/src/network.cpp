#include "epl/network.hpp"

#include <stdexcept>

namespace epl {

namespace {

// Names travel through the tab-separated quad format, so tabs and line
// breaks cannot appear in them.
bool serializable_name(std::string_view name) {
    return !name.empty() && name.find_first_of("\t\n\r") == std::string_view::npos;
}

}  // namespace

std::size_t EvidenceNetwork::intern_vertex(std::string_view name) {
    if (!serializable_name(name))
        throw std::invalid_argument(
            "intern_vertex: vertex name must be non-empty and free of tabs "
            "and line breaks");
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const std::size_t id = names_.size();
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    for (auto& [label, slice] : slices_) slice.grow(names_.size());
    return id;
}

std::optional<std::size_t> EvidenceNetwork::find_vertex(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& EvidenceNetwork::vertex_name(std::size_t id) const {
    if (id >= names_.size())
        throw std::out_of_range("vertex_name: unknown vertex id");
    return names_[id];
}

void EvidenceNetwork::assert_evidence(std::size_t subject,
                                      const std::string& predicate,
                                      std::size_t object,
                                      EvidenceTuple evidence) {
    if (subject >= names_.size() || object >= names_.size())
        throw std::out_of_range("assert_evidence: unknown vertex id");
    if (!serializable_name(predicate))
        throw std::invalid_argument(
            "assert_evidence: predicate must be non-empty and free of tabs "
            "and line breaks");
    if (!evidence.is_valid())
        throw std::invalid_argument("assert_evidence: invalid evidence tuple");
    auto [it, inserted] =
        slices_.try_emplace(predicate, EvidenceMatrix(names_.size()));
    it->second.add(subject, object, evidence);
}

EvidenceMatrix EvidenceNetwork::slice(const std::string& predicate) const {
    auto it = slices_.find(predicate);
    if (it == slices_.end()) return EvidenceMatrix(names_.size());
    return it->second;
}

void EvidenceNetwork::merge_slice(const std::string& predicate,
                                  const EvidenceMatrix& m, MergeMode mode) {
    if (!serializable_name(predicate))
        throw std::invalid_argument(
            "merge_slice: predicate must be non-empty and free of tabs and "
            "line breaks");
    if (m.dim() != names_.size())
        throw std::invalid_argument("merge_slice: dimension mismatch");
    if (mode == MergeMode::replace) {
        if (m.empty())
            slices_.erase(predicate);
        else
            slices_[predicate] = m;
        return;
    }
    auto it = slices_.find(predicate);
    if (it == slices_.end()) {
        if (!m.empty()) slices_.emplace(predicate, m);
        return;
    }
    it->second = entrywise_sum(it->second, m);
    if (it->second.empty()) slices_.erase(it);
}

std::vector<std::string> EvidenceNetwork::predicates() const {
    std::vector<std::string> out;
    out.reserve(slices_.size());
    for (const auto& [label, slice] : slices_)
        if (!slice.empty()) out.push_back(label);
    return out;
}

}  // namespace epl
