#pragma once

#include <optional>

#include "detblow/hilburch.hpp"

namespace detblow {

// Coefficient matrices of the projective generation of an all-linear
// determinantal variety: for M = (L_ij), L_ij = sum_k delta^k_ij w_k,
//   Z[k][j]  = sum_i delta^k_ij z_i   ((n+1) x (sigma+1) over k[z_1..z_sigma])
//   N[i][k]  = sum_j delta^k_ij y_j   (sigma x (n+1) over k[y_1..y_sigma+1])
// Lines inside V come from rank Z <= n-1; sigma-secants from rank N <= n-1.
struct SecantSystem {
    HilbertBurchMatrix source;
    FormMatrix z;
    FormMatrix nmat;
    int n = 0;
    int sigma = 0;
};

SecantSystem build_system(const HilbertBurchMatrix& m);

// How the empty / nonempty verdict was reached:
//   fill         (I)_t = S_t at some t <= cap: empty, exact.
//   fit          Hilbert polynomial stabilized: nonempty with dim/degree.
//   height_bound ht I_r <= (rows-r+1)(cols-r+1) fits inside the ambient
//                space, so the locus is nonempty over any base; dimension
//                may be uncomputed when the fit overruns the column budget.
//   slice        a seeded generic hyperplane slice fills: no component of
//                positive dimension (exact); isolated points are excluded
//                only for generic instances.
enum class LocusCertificate { fill, fit, height_bound, slice };

struct RankLocusReport {
    int target_rank = 0;          // rank threshold n-1
    std::size_t ambient_vars = 0; // projective ambient has ambient_vars - 1 dims
    std::size_t num_minors = 0;
    int minor_degree = 0;
    bool empty = true;
    int fill_degree = 0;    // when empty: first t with (I)_t = S_t
    bool dim_known = false; // Hilbert fit achieved within the caps and budget
    int dim = -1;
    long long degree = 0;
    int codim = 0;
    bool nonempty_by_height_bound = false;
    LocusCertificate certificate = LocusCertificate::fill;
};

const char* certificate_name(LocusCertificate c);

GradedIdeal line_locus_ideal(const SecantSystem& s);
GradedIdeal secant_locus_ideal(const SecantSystem& s);

RankLocusReport line_locus(const SecantSystem& s, const Caps& caps = {});
RankLocusReport secant_locus(const SecantSystem& s, const Caps& caps = {});

// Max rank of the evaluated matrix over seeded random points.
int generic_rank(const FormMatrix& m, int trials, std::uint64_t seed);

// The center T_y for a parameter y with rank N(y) = n-1: a line in P^n.
Line secant_line_from_parameter(const SecantSystem& s, const std::vector<std::uint64_t>& y);

// F_p-rational points of a zero-dimensional projective scheme, found by
// multiplication-operator eigenvalues on the degree-t coordinate quotient.
// Points come back in a deterministic order, first coordinate patterns
// normalized to leading 1.
std::vector<std::vector<std::uint64_t>> rational_points(const GradedIdeal& ideal, int cap,
                                                        std::uint64_t seed);

struct SecantWitness {
    std::vector<std::uint64_t> parameter; // point of Gamma
    Line line;
    long long length = 0;
};

// Searches Gamma for a rational parameter (slicing it to dimension zero
// first when needed) and returns a verified sigma-secant line.
std::optional<SecantWitness> find_secant_witness(const SecantSystem& s, std::uint64_t seed,
                                                 const Caps& caps = {}, int max_retries = 5);

} // namespace detblow
