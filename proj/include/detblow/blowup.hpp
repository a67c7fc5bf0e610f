#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detblow/hilburch.hpp"

namespace detblow {

enum class BlowupMode { sigma, sigma_plus_one };

// Type data read off the degree matrix. The sigma mode accepts the B-minimal
// templates (all-linear counts as type (d, k) = (sigma-1, sigma)); the
// sigma_plus_one mode accepts all-linear matrices as type (d, 0), where every
// minor is a degree-d generator F_j and only the X matrix appears.
struct BlowupShape {
    int d = 0, k = 0;
    int n = 0;
    int mode_degree = 0; // d + 1; psi maps into R_{d+1}
    int num_f = 0;       // degree-d minors F_j
    int num_y = 0;       // degree-(d+1) minors G_l
    std::vector<std::size_t> f_columns, g_columns; // column indices in M
    std::vector<std::size_t> b_rows;               // rows duplicated to build B
    BlowupMode mode = BlowupMode::sigma;
};

BlowupShape classify_blowup(const HilbertBurchMatrix& m, BlowupMode mode);

// The substitution x_{hj} -> w_h F_j, y_l -> G_l.
struct PsiMap {
    Ring source;               // x/y polynomial ring
    Ring target;               // k[w_0..w_n]
    std::vector<Form> images;  // one per source variable, degree d+1 forms
    std::vector<std::string> names;
    int num_x = 0, num_y = 0;

    Form apply(const Form& f) const;
};

PsiMap build_psi(const HilbertBurchMatrix& m, const BlowupShape& shape);

// (n+1) x num_f matrix whose (h, j) entry is the variable x_{hj}.
FormMatrix build_x_matrix(const PsiMap& psi, const BlowupShape& shape);

// delta[u][l][i]: L_{ul} = sum_i delta w_i over the B-rows u and linear
// columns l; beta[u][j][i][h]: Q_{uj} = sum_{i,h} beta^{uij}_h w_h w_i with
// the symmetric splitting (off-diagonal coefficients halved; p is odd).
struct MatrixCoefficients {
    std::vector<std::vector<std::vector<std::uint64_t>>> delta;
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> beta;
};

MatrixCoefficients extract_coefficients(const HilbertBurchMatrix& m, const BlowupShape& shape);

// k x (n+1) matrix with B_{ui} = sum_l delta^{ul}_i y_l + sum_{j,h} beta^{uij}_h x_{hj};
// checks psi(sum_i x_{i nu} B_{ui}) = 0 for every u, nu.
FormMatrix build_b_matrix(const HilbertBurchMatrix& m, const BlowupShape& shape, const PsiMap& psi);

// Basis of the degree-1 part of ker psi; for sigma-mode types the size must
// equal max(0, d - 2k).
std::vector<Form> build_h_forms(const PsiMap& psi, const BlowupShape& shape);

struct BlowupPresentation {
    BlowupShape shape;
    PsiMap psi;
    FormMatrix x_matrix;            // (n+1) x num_f (0 columns when no F's)
    FormMatrix b_matrix;            // k x (n+1) (0 rows in sigma_plus_one mode)
    std::vector<Form> x_minors;     // 2x2 minors of X
    std::vector<Form> bx_entries;   // entries of B*X
    std::vector<Form> b_minors;     // (n+1)-minors of B when k >= n+1
    std::vector<Form> h_forms;      // linear part of ker psi
    GradedIdeal generators;         // everything above, over the x/y ring
    long long n_embed = 0;          // embedding dimension N of Y
    long long ambient_dim = 0;      // #vars - 1 (= N' in the n = 3 cases)
};

BlowupPresentation assemble_ideal(const HilbertBurchMatrix& m, BlowupMode mode);

// Eagon-Northcott Betti table of I_Y for an all-linear source in sigma mode:
// entry i = 1..sigma-n sits at twist n+i with multiplicity
// C(sigma, n+i) * C(n+i-1, i-1).
BettiTable en_betti_table(int n, int sigma);

struct YReport {
    long long n_embed = 0;
    long long degree = 0;
    long long sectional_genus = 0;
    int dim = 0;
    std::vector<long long> hilbert;              // H_Y(t) for t = 0..T
    std::optional<bool> betti_consistent;        // all-linear sigma mode only
    std::optional<BettiTable> en_table;
    bool low_degree_kernel_match = false;        // dim (I_Y)_t = dim S_t - H_Y(t), t <= 2
};

// Invariants of Y: for all-linear sigma-mode sources via the y-ring graded
// module checked against the Eagon-Northcott table; otherwise through the
// coordinate-subring Hilbert function computed inside k[w] (the image of
// psi), which stays small even when the x/y ring does not.
YReport analyze_Y(const BlowupPresentation& pres, const Caps& caps = {});

// H_Y(t) for t = 0..t_max computed from products of a basis of (I_V)_{d+1}.
std::vector<long long> image_hilbert(const BlowupPresentation& pres, int t_max);

} // namespace detblow
