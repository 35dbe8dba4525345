#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "epl/evidence.hpp"

namespace epl {

// Sparse square matrix over evidence tuples, the per-predicate slice of an
// evidence tensor. Absent cells are <0,0> and stored entries are never
// <0,0>. Matrices are values: every operation returns a new matrix.
class EvidenceMatrix {
public:
    using Row = std::map<std::size_t, EvidenceTuple>;

    struct Entry {
        std::size_t row = 0;
        std::size_t col = 0;
        EvidenceTuple value;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    EvidenceMatrix() = default;
    explicit EvidenceMatrix(std::size_t dim) : rows_(dim) {}

    std::size_t dim() const { return rows_.size(); }

    std::size_t entry_count() const;
    bool empty() const { return entry_count() == 0; }

    // <0,0> for absent cells.
    EvidenceTuple at(std::size_t row, std::size_t col) const;

    // Overwrites the cell; writing <0,0> removes it.
    void set(std::size_t row, std::size_t col, EvidenceTuple value);

    // Revises the cell by evidence summation.
    void add(std::size_t row, std::size_t col, EvidenceTuple value);

    const Row& row(std::size_t i) const { return rows_.at(i); }

    // Row-major, ascending column within each row.
    std::vector<Entry> entries() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [j, v] : rows_[i]) fn(i, j, v);
    }

    // True when every stored entry is exactly <1,0>.
    bool is_indicator() const;

    // Embeds the matrix into a larger index space; entries keep their
    // positions. Used by the network store when new vertices are interned.
    void grow(std::size_t new_dim);

    friend bool operator==(const EvidenceMatrix&, const EvidenceMatrix&) = default;

private:
    void check_index(std::size_t row, std::size_t col) const;

    std::vector<Row> rows_;
};

// Evidential matrix product: out(i,j) = sum over l of a(i,l) * b(l,j),
// accumulated in ascending l so results are reproducible bit for bit.
EvidenceMatrix matmul(const EvidenceMatrix& a, const EvidenceMatrix& b);

// Entrywise evidence summation.
EvidenceMatrix entrywise_sum(const EvidenceMatrix& a, const EvidenceMatrix& b);

// Entrywise evidence product, used to apply matrix filters to paths.
EvidenceMatrix hadamard(const EvidenceMatrix& a, const EvidenceMatrix& b);

// Plain transpose: tuples move unchanged, including negative evidence.
// This is the converse of a non-inheritance statement.
EvidenceMatrix transpose(const EvidenceMatrix& a);

// Converse transpose: out(i,j) = <a(j,i).positive, 0>. The converse of an
// inheritance statement keeps no negative evidence.
EvidenceMatrix converse_transpose(const EvidenceMatrix& a);

// Maps every stored entry to <1,0>, decoupling inferred evidence from the
// magnitudes that produced it.
EvidenceMatrix clip(const EvidenceMatrix& a);

// Complement of an indicator matrix: stored <1,0> cells become absent and
// absent cells become <1,0>. Rejects non-indicator input.
EvidenceMatrix not_filter(const EvidenceMatrix& a);

// Evidential identity: <1,0> on the diagonal.
EvidenceMatrix identity(std::size_t dim);

bool approx_equal(const EvidenceMatrix& a, const EvidenceMatrix& b,
                  double tol = 1e-9);

}  // namespace epl
