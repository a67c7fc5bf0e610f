#include "detblow/bminimal.hpp"

namespace detblow {

BMinimalProfile profile_from_degree(long long s) {
    if (s < 3) fail(Errc::invalid_input, "B-minimal profiles need degree >= 3");
    BMinimalProfile p;
    p.s = s;
    int d = 1;
    while (binom(d + 2, 2) < s) ++d;
    p.d = d;
    p.k = static_cast<int>(s - binom(d + 1, 2));
    // s = C(d+1,2) forces k = 0 at this d; the printed range 1 <= k <= d+1
    // lands it at the smaller type (d-1, k = d) instead.
    if (p.k == 0) {
        p.d = --d;
        p.k = d + 1;
    }
    p.sigma = p.d + 1;
    p.rho = (p.d <= 2 * p.k) ? p.k : p.d - p.k;
    p.gens_deg_d = p.d - p.k + 1;
    p.gens_deg_d1 = std::max(0, 2 * p.k - p.d);

    DegreeMatrix tmpl;
    if (p.d <= 2 * p.k) {
        // k rows; 2k-d linear columns then d-k+1 quadric columns.
        tmpl.e.assign(static_cast<std::size_t>(p.k), {});
        for (auto& row : tmpl.e) {
            for (int j = 0; j < 2 * p.k - p.d; ++j) row.push_back(1);
            for (int j = 0; j < p.d - p.k + 1; ++j) row.push_back(2);
        }
    } else {
        // k quadric rows then d-2k linear rows; d-k+1 columns.
        for (int i = 0; i < p.k; ++i) tmpl.e.push_back(std::vector<int>(p.gens_deg_d, 2));
        for (int i = 0; i < p.d - 2 * p.k; ++i) tmpl.e.push_back(std::vector<int>(p.gens_deg_d, 1));
    }
    p.template_matrix = tmpl;

    TwistData tw = twists_from_degree_matrix(tmpl);
    p.gen_twists = tw.gen_twists;
    p.syz_twists = tw.syz_twists;
    std::map<int, long long> gen_mult, syz_mult;
    for (int t : tw.gen_twists) gen_mult[t]++;
    for (int t : tw.syz_twists) syz_mult[t]++;
    for (const auto& [twist, mult] : gen_mult) p.betti.entries.push_back({1, twist, mult});
    for (const auto& [twist, mult] : syz_mult) p.betti.entries.push_back({2, twist, mult});
    p.betti.normalize();
    p.genus = genus_from_twists(tw.syz_twists, tw.gen_twists);
    return p;
}

long long genus_minimal(long long s) {
    if (s < 3) fail(Errc::invalid_input, "genus_minimal needs degree >= 3");
    long long g = 0;
    for (int t = 1;; ++t) {
        long long h = std::min(binom(t + 2, 2), s);
        if (h == s) break;
        g += s - h;
    }
    return g;
}

HilbertBurchMatrix sample_with_retries(const DegreeMatrix& d, int n, const PrimeField& fp,
                                       std::uint64_t seed, int max_retries) {
    for (int attempt = 0;; ++attempt) {
        std::uint64_t eff = seed + 0x9E3779B9ull * static_cast<std::uint64_t>(attempt);
        HilbertBurchMatrix m = sample_generic(d, n, fp, eff);
        try {
            variety_ideal(m);
            return m;
        } catch (const Error& e) {
            if (e.code() != Errc::degenerate || attempt >= max_retries) throw;
        }
    }
}

HilbertBurchMatrix sample_bminimal(long long s, int n, const PrimeField& fp, std::uint64_t seed,
                                   int max_retries) {
    BMinimalProfile p = profile_from_degree(s);
    return sample_with_retries(p.template_matrix, n, fp, seed, max_retries);
}

} // namespace detblow
