#include "detblow/form_matrix.hpp"

#include <map>

namespace detblow {

void FormMatrix::set(std::size_t i, std::size_t j, Form f) {
    if (f.ring() != ring_) fail(Errc::invalid_input, "matrix entry over wrong ring");
    entries_[i * cols_ + j] = std::move(f);
}

FormMatrix FormMatrix::transposed() const {
    FormMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

std::vector<std::uint64_t> FormMatrix::eval(const std::vector<std::uint64_t>& point) const {
    std::vector<std::uint64_t> out;
    out.reserve(entries_.size());
    for (const auto& f : entries_) out.push_back(f.eval(point));
    return out;
}

namespace {

// Determinants of all submatrices spanning rows 0..r-1 and an r-subset of the
// chosen columns, built one row at a time so cofactors are shared across
// overlapping column subsets.
std::map<std::uint64_t, Form> subset_minors(const FormMatrix& m, const std::vector<std::size_t>& cols,
                                            std::size_t nrows) {
    const Ring& ring = m.ring();
    std::map<std::uint64_t, Form> cur;
    cur.emplace(0, Form::constant(ring, 1));
    for (std::size_t r = 0; r < nrows; ++r) {
        std::map<std::uint64_t, Form> next;
        for (const auto& [mask, minor] : cur) {
            for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                std::uint64_t bit = std::uint64_t(1) << ci;
                if (mask & bit) continue;
                const Form& entry = m.at(r, cols[ci]);
                // Expansion along the new last row: sign by the column's
                // position inside the enlarged subset.
                int pos = 0;
                for (std::size_t b = 0; b < ci; ++b)
                    if ((mask >> b) & 1) ++pos;
                bool negative = ((static_cast<int>(r) + pos) % 2) != 0;
                Form contrib = entry * minor;
                if (negative) contrib = contrib.negated();
                std::uint64_t nmask = mask | bit;
                auto it = next.find(nmask);
                if (it == next.end()) {
                    int deg = entry.degree() + minor.degree();
                    auto [ins, ok] = next.emplace(nmask, Form::zero(ring, deg));
                    (void)ok;
                    it = ins;
                }
                if (!contrib.is_zero()) {
                    Form sum = it->second.is_zero() ? contrib : it->second + contrib;
                    it->second = std::move(sum);
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Form det(const FormMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::invalid_input, "determinant of non-square matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    auto minors = subset_minors(m, cols, m.rows());
    std::uint64_t full = m.cols() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m.cols()) - 1;
    return minors.at(full);
}

std::vector<Form> maximal_minors(const FormMatrix& m) {
    if (m.cols() != m.rows() + 1) fail(Errc::invalid_input, "maximal minors need a rho x (rho+1) matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    auto minors = subset_minors(m, cols, m.rows());
    std::uint64_t full = (std::uint64_t(1) << m.cols()) - 1;
    std::vector<Form> out;
    out.reserve(m.cols());
    for (std::size_t b = 0; b < m.cols(); ++b) {
        Form f = minors.at(full ^ (std::uint64_t(1) << b));
        // F_b = (-1)^b det(delete column b) with b 1-based.
        if ((b + 1) % 2 != 0) f = f.negated();
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

void subsets_of(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets_of(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<MinorEntry> size_k_minors(const FormMatrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    subsets_of(m.rows(), k, cur, 0, row_sets);
    subsets_of(m.cols(), k, cur, 0, col_sets);
    std::vector<std::size_t> all_cols(m.cols());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    std::vector<MinorEntry> out;
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& rs : row_sets) {
        FormMatrix sub(m.ring(), k, m.cols());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) sub.set(i, j, m.at(rs[i], j));
        auto minors = subset_minors(sub, all_cols, k);
        for (const auto& cs : col_sets) {
            std::uint64_t mask = 0;
            for (auto c : cs) mask |= std::uint64_t(1) << c;
            out.push_back({rs, cs, minors.at(mask)});
        }
    }
    return out;
}

} // namespace detblow
