#include "detblow/graded.hpp"

#include <algorithm>

namespace detblow {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step
    }
    return r;
}

MonomialBasis::MonomialBasis(std::size_t vars, int degree) : list_(monomials_of_degree(vars, degree)) {
    index_.reserve(list_.size() * 2);
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) fail(Errc::invalid_input, "monomial outside basis");
    return it->second;
}

std::vector<std::uint32_t> MonomialBasis::coefficient_row(const Form& f, const Monomial& shift) const {
    std::vector<std::uint32_t> row(list_.size(), 0);
    for (const auto& [m, c] : f.terms()) row[index(m + shift)] = static_cast<std::uint32_t>(c);
    return row;
}

GradedIdeal::GradedIdeal(Ring ring, std::vector<Form> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) {
        if (g.ring() != ring_) fail(Errc::invalid_input, "generator over wrong ring");
        if (g.is_zero()) fail(Errc::invalid_input, "zero generator");
    }
}

int GradedIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

long long GradedIdeal::ring_piece_dimension(int t) const {
    if (t < 0) return 0;
    return binom(t + ambient_dim(), ambient_dim());
}

long long GradedIdeal::compute_dimension(int t) const {
    MonomialBasis basis(ring_.vars, t);
    RowEchelon ech(ring_.fp, basis.size());
    // Round-robin across generators so the rank saturates early when the
    // piece fills the whole ring; the rank itself is order-independent.
    std::vector<const Form*> live;
    std::vector<std::vector<Monomial>> mults;
    std::size_t longest = 0;
    for (const auto& g : gens_) {
        if (g.degree() > t) continue;
        live.push_back(&g);
        mults.push_back(monomials_of_degree(ring_.vars, t - g.degree()));
        longest = std::max(longest, mults.back().size());
    }
    for (std::size_t mi = 0; mi < longest; ++mi) {
        for (std::size_t gi = 0; gi < live.size(); ++gi) {
            if (mi >= mults[gi].size()) continue;
            auto row = basis.coefficient_row(*live[gi], mults[gi][mi]);
            ech.add_row(row);
            if (ech.rank() == basis.size()) return static_cast<long long>(ech.rank());
        }
    }
    return static_cast<long long>(ech.rank());
}

long long GradedIdeal::piece_dimension(int t) const {
    if (t < 0) return 0;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->dims.find(t);
        if (it != cache_->dims.end()) return it->second;
    }
    long long dim = compute_dimension(t);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->dims.emplace(t, dim);
    return dim;
}

long long GradedIdeal::hilbert(int t) const {
    if (t < 0) return 0;
    return ring_piece_dimension(t) - piece_dimension(t);
}

std::shared_ptr<RowEchelon> GradedIdeal::piece_echelon(int t) const {
    MonomialBasis basis(ring_.vars, t);
    auto ech = std::make_shared<RowEchelon>(ring_.fp, basis.size());
    for (const auto& g : gens_) {
        if (g.degree() > t) continue;
        for (const auto& mult : monomials_of_degree(ring_.vars, t - g.degree())) {
            auto row = basis.coefficient_row(g, mult);
            ech->add_row(row);
        }
    }
    return ech;
}

int sigma_invariant(const GradedIdeal& ideal, int cap) {
    // least t with Delta^(n-1) H(t) = 0, H extended by 0 below t = 0
    int n = ideal.ambient_dim();
    int order = n - 1;
    for (int t = 0; t <= cap; ++t) {
        long long delta = 0;
        for (int i = 0; i <= order; ++i) {
            long long sign = (i % 2 == 0) ? 1 : -1;
            delta += sign * binom(order, i) * ideal.hilbert(t - i);
        }
        if (delta == 0) return t;
    }
    fail(Errc::cap_exceeded, "sigma not reached below cap " + std::to_string(cap));
}

PolyFit fit_from_values(const std::vector<long long>& values, int cap, int min_start) {
    int t_max = static_cast<int>(values.size()) - 1;
    auto delta = [&](int order, int t) {
        long long d = 0;
        for (int i = 0; i <= order; ++i) {
            long long sign = (i % 2 == 0) ? 1 : -1;
            long long h = (t - i) < 0 ? 0 : values[static_cast<std::size_t>(t - i)];
            d += sign * binom(order, i) * h;
        }
        return d;
    };
    for (int m = 0; m <= t_max; ++m) {
        // Need Delta^(m+1) H = 0 on three consecutive degrees: two matching
        // interpolation windows plus one confirmation point.
        for (int t = std::max(m + 1, min_start); t + 2 <= t_max; ++t) {
            if (delta(m + 1, t) == 0 && delta(m + 1, t + 1) == 0 && delta(m + 1, t + 2) == 0) {
                long long deg = delta(m, t + 2);
                if (deg == 0) break; // lower-dimensional fit would have caught it
                // Transient zeros inside a still-moving difference table show
                // up with impossible signs; a genuine stabilized window has
                // deg > 0 and a nonnegative column above it.
                if (deg < 0) continue;
                bool sane = true;
                for (int j = 0; j <= m && sane; ++j)
                    if (delta(j, t + 2) < 0) sane = false;
                if (!sane) continue;
                PolyFit fit;
                fit.dim = m;
                fit.degree = deg;
                fit.stabilized_at = t;
                if (m >= 1) {
                    int ts = t + 2;
                    long long dm1 = delta(m - 1, ts);
                    fit.sectional_genus = 1 + deg * ts - dm1;
                } else {
                    fit.sectional_genus = 0;
                }
                return fit;
            }
        }
    }
    fail(Errc::cap_exceeded,
         "insufficient degree range: Hilbert differences not stabilized below cap " + std::to_string(cap));
}

PolyFit hilbert_poly_fit(const GradedIdeal& ideal, int cap) {
    // Incremental: extend the table one degree at a time and stop at the
    // first valid fit. No window may start before every generator acts, so
    // pre-generator plateaus cannot masquerade as stabilization.
    int min_start = ideal.max_generator_degree() + 1;
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(cap) + 1);
    for (int t = 0; t <= cap; ++t) {
        values.push_back(ideal.hilbert(t));
        if (t < min_start + 2) continue;
        try {
            return fit_from_values(values, cap, min_start);
        } catch (const Error& e) {
            if (e.code() != Errc::cap_exceeded) throw;
        }
    }
    fail(Errc::cap_exceeded,
         "insufficient degree range: Hilbert differences not stabilized below cap " + std::to_string(cap));
}

std::vector<std::vector<long long>> hilbert_table(const GradedIdeal& ideal, int t_max, int orders) {
    std::vector<long long> h(static_cast<std::size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) h[static_cast<std::size_t>(t)] = ideal.hilbert(t);
    std::vector<std::vector<long long>> rows;
    for (int t = 0; t <= t_max; ++t) {
        std::vector<long long> row{t, h[static_cast<std::size_t>(t)]};
        for (int order = 1; order <= orders; ++order) {
            long long d = 0;
            for (int i = 0; i <= order; ++i) {
                long long sign = (i % 2 == 0) ? 1 : -1;
                long long v = (t - i) < 0 ? 0 : h[static_cast<std::size_t>(t - i)];
                d += sign * binom(order, i) * v;
            }
            row.push_back(d);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void BettiTable::normalize() {
    std::sort(entries.begin(), entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.twist < b.twist;
    });
    std::vector<BettiEntry> merged;
    for (const auto& e : entries) {
        if (e.multiplicity <= 0) fail(Errc::invalid_input, "betti multiplicity must be positive");
        if (!merged.empty() && merged.back().index == e.index && merged.back().twist == e.twist)
            merged.back().multiplicity += e.multiplicity;
        else
            merged.push_back(e);
    }
    entries = std::move(merged);
}

long long betti_to_hilbert(const BettiTable& table, std::size_t ring_vars, int t) {
    long long n = static_cast<long long>(ring_vars) - 1;
    long long h = binom(t + n, n);
    for (const auto& e : table.entries) {
        long long sign = (e.index % 2 == 1) ? -1 : 1;
        h += sign * e.multiplicity * binom(t - e.twist + n, n);
    }
    return h;
}

bool fills_ring_by(const GradedIdeal& ideal, int cap, int* fill_degree) {
    int start = 0;
    for (const auto& g : ideal.generators())
        start = (start == 0) ? g.degree() : std::min(start, g.degree());
    for (int t = start; t <= cap; ++t) {
        if (ideal.piece_dimension(t) == ideal.ring_piece_dimension(t)) {
            if (fill_degree) *fill_degree = t;
            return true;
        }
    }
    return false;
}

} // namespace detblow
