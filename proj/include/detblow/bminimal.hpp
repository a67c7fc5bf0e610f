#pragma once

#include "detblow/graded.hpp"
#include "detblow/hilburch.hpp"

namespace detblow {

// Numerology of Betti-minimal curves: degree s determines the type (d, k)
// through s = C(d+1, 2) + k with 1 <= k <= d+1, and everything else follows.
struct BMinimalProfile {
    long long s = 0;
    int d = 0, k = 0;
    int sigma = 0;           // d + 1
    int rho = 0;             // k when d <= 2k, else d - k
    int gens_deg_d = 0;      // d - k + 1 forms of degree d
    int gens_deg_d1 = 0;     // max(0, 2k - d) forms of degree d + 1
    DegreeMatrix template_matrix;
    BettiTable betti;
    std::vector<int> gen_twists, syz_twists;
    long long genus = 0;
};

BMinimalProfile profile_from_degree(long long s);

// g = sum_{t >= 1} (s - H(Z, t)) with the maximal section Hilbert function
// H(Z, t) = min(C(t+2, 2), s).
long long genus_minimal(long long s);

// Generic sample of the type template over k[w_0..w_n]; retries with
// recorded seed offsets when a degenerate sample fires.
HilbertBurchMatrix sample_bminimal(long long s, int n, const PrimeField& fp, std::uint64_t seed,
                                   int max_retries = 5);

// Resamples an arbitrary degree-matrix template with the same retry policy.
HilbertBurchMatrix sample_with_retries(const DegreeMatrix& d, int n, const PrimeField& fp,
                                       std::uint64_t seed, int max_retries = 5);

} // namespace detblow
