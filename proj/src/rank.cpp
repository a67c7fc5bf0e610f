#include "detblow/rank.hpp"

namespace detblow {

namespace {

// Folds x < 2^63 into [0, 2^31 - 1) for the Mersenne prime 2^31 - 1.
inline std::uint64_t mod_m31(std::uint64_t x) {
    x = (x & kMersenne31) + (x >> 31);
    x = (x & kMersenne31) + (x >> 31);
    if (x >= kMersenne31) x -= kMersenne31;
    return x;
}

} // namespace

RowEchelon::RowEchelon(const PrimeField& fp, std::size_t cols)
    : fp_(fp), cols_(cols), mersenne_(fp.p() == kMersenne31), pivot_row_(cols, -1) {}

void RowEchelon::axpy(std::vector<std::uint32_t>& r, std::uint64_t f, const std::vector<std::uint32_t>& b,
                      std::size_t from) const {
    // r += f * b, entrywise mod p. f < p and entries < p < 2^31, so each
    // accumulation fits in 64 bits before reduction.
    if (mersenne_) {
        for (std::size_t k = from; k < cols_; ++k) {
            std::uint64_t v = r[k] + f * b[k];
            r[k] = static_cast<std::uint32_t>(mod_m31(v));
        }
    } else {
        const std::uint64_t p = fp_.p();
        for (std::size_t k = from; k < cols_; ++k) {
            std::uint64_t v = r[k] + f * b[k];
            r[k] = static_cast<std::uint32_t>(v % p);
        }
    }
}

bool RowEchelon::add_row(std::vector<std::uint32_t>& row) {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] == 0) continue;
        std::int32_t pr = pivot_row_[j];
        if (pr < 0) {
            std::uint64_t inv = fp_.inv(row[j]);
            if (inv != 1) {
                for (std::size_t k = j; k < cols_; ++k)
                    if (row[k]) row[k] = static_cast<std::uint32_t>(fp_.mul(row[k], inv));
            }
            pivot_row_[j] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        std::uint64_t f = fp_.neg(row[j]);
        axpy(row, f, rows_[static_cast<std::size_t>(pr)], j);
        row[j] = 0;
    }
    return false;
}

void RowEchelon::reduce(std::vector<std::uint32_t>& row) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] == 0) continue;
        std::int32_t pr = pivot_row_[j];
        if (pr < 0) continue;
        std::uint64_t f = fp_.neg(row[j]);
        axpy(row, f, rows_[static_cast<std::size_t>(pr)], j);
        row[j] = 0;
    }
}

std::vector<std::size_t> RowEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols_; ++j)
        if (pivot_row_[j] < 0) out.push_back(j);
    return out;
}

std::size_t matrix_rank(const PrimeField& fp, std::vector<std::vector<std::uint32_t>> rows, std::size_t cols) {
    RowEchelon ech(fp, cols);
    for (auto& r : rows) ech.add_row(r);
    return ech.rank();
}

std::vector<std::vector<std::uint64_t>> kernel_basis(const PrimeField& fp,
                                                     const std::vector<std::vector<std::uint32_t>>& rows,
                                                     std::size_t cols) {
    RowEchelon ech(fp, cols);
    for (const auto& r : rows) {
        auto copy = r;
        ech.add_row(copy);
    }
    std::vector<std::size_t> pivot_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (ech.is_pivot(j)) pivot_cols.push_back(j);
    std::vector<std::vector<std::uint64_t>> kernel;
    for (std::size_t free_col : ech.free_columns()) {
        std::vector<std::uint64_t> v(cols, 0);
        v[free_col] = 1;
        // The echelon is not fully reduced, so solve pivots bottom-up.
        for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
            std::size_t j = *it;
            const auto& b = ech.row_with_pivot(j);
            std::uint64_t acc = 0;
            for (std::size_t k = j + 1; k < cols; ++k)
                if (b[k] && v[k]) acc = fp.add(acc, fp.mul(b[k], v[k]));
            v[j] = fp.neg(acc);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<std::uint64_t> solve_square(const PrimeField& fp, std::vector<std::vector<std::uint64_t>> a,
                                        std::vector<std::uint64_t> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) fail(Errc::degenerate, "singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        std::uint64_t inv = fp.inv(a[col][col]);
        for (std::size_t k = col; k < n; ++k) a[col][k] = fp.mul(a[col][k], inv);
        b[col] = fp.mul(b[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            std::uint64_t f = a[r][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] = fp.sub(a[r][k], fp.mul(f, a[col][k]));
            b[r] = fp.sub(b[r], fp.mul(f, b[col]));
        }
    }
    return b;
}

} // namespace detblow
