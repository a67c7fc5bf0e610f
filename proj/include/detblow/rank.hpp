#pragma once

#include <cstdint>
#include <vector>

#include "detblow/field.hpp"

namespace detblow {

// Incremental row-echelon basis over F_p with dense uint32 rows. Rows are
// normalized (pivot 1) and incoming rows are fully forward-reduced, so
// reduce() yields the canonical normal form supported on non-pivot columns.
// Deterministic: pivoting always takes the first nonzero column.
class RowEchelon {
public:
    RowEchelon(const PrimeField& fp, std::size_t cols);

    // Reduces the row in place against the basis; inserts it when nonzero.
    // Returns true when the rank grew.
    bool add_row(std::vector<std::uint32_t>& row);

    // Normal form only; the basis is left unchanged.
    void reduce(std::vector<std::uint32_t>& row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
    const std::vector<std::uint32_t>& row_with_pivot(std::size_t col) const {
        return rows_[static_cast<std::size_t>(pivot_row_[col])];
    }
    const std::vector<std::uint32_t>& basis_row(std::size_t i) const { return rows_[i]; }
    std::vector<std::size_t> free_columns() const;

private:
    PrimeField fp_;
    std::size_t cols_;
    bool mersenne_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::int32_t> pivot_row_;

    void axpy(std::vector<std::uint32_t>& r, std::uint64_t f, const std::vector<std::uint32_t>& b,
              std::size_t from) const;
};

// Rank of a dense scalar matrix (row-major), destructive helper.
std::size_t matrix_rank(const PrimeField& fp, std::vector<std::vector<std::uint32_t>> rows, std::size_t cols);

// Kernel basis of a dense scalar matrix with `cols` unknowns; each returned
// vector is a column vector of length cols.
std::vector<std::vector<std::uint64_t>> kernel_basis(const PrimeField& fp,
                                                     const std::vector<std::vector<std::uint32_t>>& rows,
                                                     std::size_t cols);

// Solves the square system A*x = b, A given row-major; fails when singular.
std::vector<std::uint64_t> solve_square(const PrimeField& fp, std::vector<std::vector<std::uint64_t>> a,
                                        std::vector<std::uint64_t> b);

} // namespace detblow
