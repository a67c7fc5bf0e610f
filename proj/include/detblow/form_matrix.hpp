#pragma once

#include <vector>

#include "detblow/form.hpp"

namespace detblow {

// Row-major matrix of forms over one shared ring.
class FormMatrix {
public:
    FormMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          entries_(rows * cols, Form::zero(ring_, 0)) {}

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Form& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Form f);

    FormMatrix transposed() const;

    // Evaluates every entry at a point; row-major scalars.
    std::vector<std::uint64_t> eval(const std::vector<std::uint64_t>& point) const;

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Form> entries_;
};

// Determinant of a square matrix of forms (Laplace with column-subset reuse).
Form det(const FormMatrix& m);

// Signed maximal minors F_1..F_{cols} of a rows x (rows+1) matrix, where
// F_b = (-1)^b det(m with column b deleted), b 1-based. Every row then
// satisfies sum_b m[i][b] * F_b = 0 identically.
std::vector<Form> maximal_minors(const FormMatrix& m);

// All k x k minors, as (row subset, column subset, determinant) triples in
// lexicographic subset order.
struct MinorEntry {
    std::vector<std::size_t> row_set, col_set;
    Form value;
};
std::vector<MinorEntry> size_k_minors(const FormMatrix& m, std::size_t k);

} // namespace detblow
