#include "epl/matrix.hpp"

#include <stdexcept>

namespace epl {

std::size_t EvidenceMatrix::entry_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

EvidenceTuple EvidenceMatrix::at(std::size_t row, std::size_t col) const {
    check_index(row, col);
    const auto& r = rows_[row];
    auto it = r.find(col);
    return it == r.end() ? kNoEvidence : it->second;
}

void EvidenceMatrix::set(std::size_t row, std::size_t col, EvidenceTuple value) {
    check_index(row, col);
    if (!value.is_valid())
        throw std::invalid_argument("EvidenceMatrix::set: invalid evidence tuple");
    if (value.is_zero())
        rows_[row].erase(col);
    else
        rows_[row][col] = value;
}

void EvidenceMatrix::add(std::size_t row, std::size_t col, EvidenceTuple value) {
    set(row, col, at(row, col) + value);
}

std::vector<EvidenceMatrix::Entry> EvidenceMatrix::entries() const {
    std::vector<Entry> out;
    out.reserve(entry_count());
    for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        out.push_back(Entry{i, j, v});
    });
    return out;
}

bool EvidenceMatrix::is_indicator() const {
    for (const auto& r : rows_)
        for (const auto& [j, v] : r)
            if (v != kUnitEvidence) return false;
    return true;
}

void EvidenceMatrix::grow(std::size_t new_dim) {
    if (new_dim < rows_.size())
        throw std::invalid_argument("EvidenceMatrix::grow: cannot shrink");
    rows_.resize(new_dim);
}

void EvidenceMatrix::check_index(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= rows_.size())
        throw std::out_of_range("EvidenceMatrix: index out of range");
}

namespace {

void check_same_dim(const EvidenceMatrix& a, const EvidenceMatrix& b,
                    const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

EvidenceMatrix matmul(const EvidenceMatrix& a, const EvidenceMatrix& b) {
    check_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    EvidenceMatrix out(n);
    // Row maps iterate in ascending column order, so for each output cell
    // (i,j) the terms arrive in ascending l. That fixes the floating-point
    // summation order.
    for (std::size_t i = 0; i < n; ++i) {
        EvidenceMatrix::Row acc;
        for (const auto& [l, a_il] : a.row(i)) {
            for (const auto& [j, b_lj] : b.row(l)) acc[j] += a_il * b_lj;
        }
        for (const auto& [j, v] : acc)
            if (!v.is_zero()) out.set(i, j, v);
    }
    return out;
}

EvidenceMatrix entrywise_sum(const EvidenceMatrix& a, const EvidenceMatrix& b) {
    check_same_dim(a, b, "entrywise_sum");
    EvidenceMatrix out = a;
    b.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        out.add(i, j, v);
    });
    return out;
}

EvidenceMatrix hadamard(const EvidenceMatrix& a, const EvidenceMatrix& b) {
    check_same_dim(a, b, "hadamard");
    EvidenceMatrix out(a.dim());
    a.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        EvidenceTuple w = b.at(i, j);
        if (w.is_zero()) return;
        out.set(i, j, v * w);
    });
    return out;
}

EvidenceMatrix transpose(const EvidenceMatrix& a) {
    EvidenceMatrix out(a.dim());
    a.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        out.set(j, i, v);
    });
    return out;
}

EvidenceMatrix converse_transpose(const EvidenceMatrix& a) {
    EvidenceMatrix out(a.dim());
    a.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        if (v.positive != 0.0) out.set(j, i, EvidenceTuple{v.positive, 0.0});
    });
    return out;
}

EvidenceMatrix clip(const EvidenceMatrix& a) {
    EvidenceMatrix out(a.dim());
    a.for_each([&](std::size_t i, std::size_t j, EvidenceTuple) {
        out.set(i, j, kUnitEvidence);
    });
    return out;
}

EvidenceMatrix not_filter(const EvidenceMatrix& a) {
    if (!a.is_indicator())
        throw std::invalid_argument(
            "not_filter: input must be an indicator matrix (only <1,0> entries)");
    const std::size_t n = a.dim();
    EvidenceMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j).is_zero()) out.set(i, j, kUnitEvidence);
    return out;
}

EvidenceMatrix identity(std::size_t dim) {
    EvidenceMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out.set(i, i, kUnitEvidence);
    return out;
}

bool approx_equal(const EvidenceMatrix& a, const EvidenceMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    bool ok = true;
    a.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        if (!approx_equal(v, b.at(i, j), tol)) ok = false;
    });
    b.for_each([&](std::size_t i, std::size_t j, EvidenceTuple v) {
        if (!approx_equal(v, a.at(i, j), tol)) ok = false;
    });
    return ok;
}

}  // namespace epl
