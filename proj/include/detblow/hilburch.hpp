#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detblow/binary_forms.hpp"
#include "detblow/form_matrix.hpp"
#include "detblow/graded.hpp"
#include "detblow/rng.hpp"

namespace detblow {

// Degree caps used by the graded computations; 0 means "derive from the
// generator degrees" (sigma: +4, polynomial fit: +8). column_budget bounds
// the Macaulay piece width a rank-locus scan may grow to before settling
// for a nonemptiness-only answer.
struct Caps {
    int max_degree = 0;
    long long column_budget = 9000;
    int sigma_cap(int max_gen_degree) const { return max_degree > 0 ? max_degree : max_gen_degree + 4; }
    int fit_cap(int max_gen_degree) const { return max_degree > 0 ? max_degree : max_gen_degree + 8; }
};

// Entry-degree matrix of a Hilbert-Burch matrix; additivity
// e[i][j] = e[i][0] + e[0][j] - e[0][0] is what validate checks.
struct DegreeMatrix {
    std::vector<std::vector<int>> e;

    std::size_t rows() const { return e.size(); }
    std::size_t cols() const { return e.empty() ? 0 : e.front().size(); }

    static DegreeMatrix all_linear(std::size_t sigma);
    bool is_all_linear() const;
};

struct DegreeViolation {
    std::size_t i = 0, j = 0; // 1-based cell
    std::string what;
};

std::optional<DegreeViolation> validate_degree_matrix(const DegreeMatrix& d);

// Row/column splitting e[i][j] = u_i + v_j normalized by min(u) = 0, plus
// the resolution twists: generators d_j = S - v_j, syzygies n_i = S + u_i,
// S = sum(u) + sum(v).
struct TwistData {
    std::vector<int> u, v;
    int S = 0;
    std::vector<int> gen_twists; // d_j
    std::vector<int> syz_twists; // n_j
};

TwistData twists_from_degree_matrix(const DegreeMatrix& d);

// deg V for a codimension-2 scheme with these twists.
long long degree_from_twists(const TwistData& t);

// g = sum C(n_j - 1, 3) - sum C(d_i - 1, 3)  (curves in P^3)
long long genus_from_twists(const std::vector<int>& syz_twists, const std::vector<int>& gen_twists);

// A rho x (rho+1) matrix of forms over k[w_0..w_n] whose entry degrees match
// a validated degree matrix.
class HilbertBurchMatrix {
public:
    HilbertBurchMatrix(DegreeMatrix degrees, FormMatrix entries, int n);

    const DegreeMatrix& degrees() const { return degrees_; }
    const FormMatrix& entries() const { return entries_; }
    int n() const { return n_; }
    const Ring& ring() const { return entries_.ring(); }
    std::size_t rho() const { return entries_.rows(); }
    bool all_linear() const { return degrees_.is_all_linear(); }

private:
    DegreeMatrix degrees_;
    FormMatrix entries_;
    int n_;
};

HilbertBurchMatrix sample_generic(const DegreeMatrix& d, int n, const PrimeField& fp, std::uint64_t seed);

// Signed maximal minors as a graded ideal; degenerate error when some minor
// vanishes identically (caller may reseed).
GradedIdeal variety_ideal(const HilbertBurchMatrix& m);

// A line in P^n spanned by two independent points.
struct Line {
    std::vector<std::uint64_t> p, q;
};

Line make_line(const PrimeField& fp, std::vector<std::uint64_t> p, std::vector<std::uint64_t> q);
Line random_line(const PrimeField& fp, int n, SplitMix64& rng);

// Entries restricted to the line's (s, t)-parametrization.
FormMatrix restrict_to_line(const FormMatrix& m, const Line& line);
Form restrict_form(const Form& f, const Line& line);

// Length of the scheme V cap L; nullopt means the line lies inside V.
std::optional<long long> intersection_length(const HilbertBurchMatrix& m, const Line& line);

struct LineIntersection {
    std::vector<std::pair<std::vector<std::uint64_t>, int>> points; // with multiplicity
    int irrational_degree = 0;
};

LineIntersection points_on_line(const HilbertBurchMatrix& m, const Line& line);

struct VarietyReport {
    int n = 0;
    std::size_t rho = 0;
    DegreeMatrix degree_matrix;
    std::uint64_t p = 0;
    long long degree = 0;
    int dim = 0;
    int sigma = 0;
    std::optional<long long> genus; // curves in P^3 only
    std::vector<int> gen_twists, syz_twists;
    std::vector<std::vector<long long>> hilbert; // rows: t, H, deltas
    int fit_stabilized_at = 0;
};

VarietyReport analyze(const HilbertBurchMatrix& m, const Caps& caps = {});

// Random plane section: substitutes a seeded generic P^2 inside P^n into the
// matrix; the section is determinantal with the same degree matrix.
HilbertBurchMatrix plane_section(const HilbertBurchMatrix& m, std::uint64_t seed);

} // namespace detblow
