#include <doctest.h>

#include "detblow/graded.hpp"
#include "detblow/hilburch.hpp"
#include "detblow/rng.hpp"

using namespace detblow;

namespace {

Ring ring4() { return Ring{4, PrimeField()}; }

GradedIdeal twisted_cubic() {
    Ring r = ring4();
    FormMatrix m(r, 2, 3);
    m.set(0, 0, Form::variable(r, 0));
    m.set(0, 1, Form::variable(r, 1));
    m.set(0, 2, Form::variable(r, 2));
    m.set(1, 0, Form::variable(r, 1));
    m.set(1, 1, Form::variable(r, 2));
    m.set(1, 2, Form::variable(r, 3));
    return GradedIdeal(r, maximal_minors(m));
}

} // namespace

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(3, 3) == 1);
    CHECK(binom(2, 3) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(10, 5) == 252);
}

TEST_CASE("ideal piece dimensions") {
    Ring r = ring4();
    GradedIdeal principal(r, {Form::variable(r, 0)});
    CHECK(principal.piece_dimension(1) == 1);

    GradedIdeal two(r, {Form::variable(r, 0), Form::variable(r, 1)});
    // monomials of degree 2 divisible by w0 or w1: 10 - C(3,2) = 7
    CHECK(two.piece_dimension(2) == 7);

    // Twisted cubic at t = 2: the three conics have pairwise distinct leading
    // monomials (w1 w3, w0 w3, w0 w2), so the rank is 3 by inspection.
    CHECK(twisted_cubic().piece_dimension(2) == 3);

    CHECK(two.piece_dimension(0) == 0);
    CHECK(principal.hilbert(0) == 1);
}

TEST_CASE("hilbert function values") {
    GradedIdeal tc = twisted_cubic();
    CHECK(tc.hilbert(2) == 7); // 10 - 3, and 3t+1 at t=2
    for (int t = 1; t <= 6; ++t) CHECK(tc.hilbert(t) == 3 * t + 1);
}

TEST_CASE("sigma invariant") {
    GradedIdeal tc = twisted_cubic();
    CHECK(sigma_invariant(tc, 6) == 2);

    // All-linear 3x4 over a seeded sample: sigma = 3.
    auto m = sample_generic(DegreeMatrix::all_linear(3), 3, PrimeField(), 1);
    CHECK(sigma_invariant(variety_ideal(m), 7) == 3);

    // Example 1 degree matrix (2,2,2 / 1,1,1): sigma = 4.
    DegreeMatrix d;
    d.e = {{2, 2, 2}, {1, 1, 1}};
    auto c75 = sample_generic(d, 3, PrimeField(), 1);
    GradedIdeal ideal = variety_ideal(c75);
    CHECK(sigma_invariant(ideal, 7) == 4);
    CHECK(ideal.hilbert(4) == 24); // 35 - 11, also 7*4 + 1 - 5

    CHECK_THROWS_AS(sigma_invariant(tc, 1), Error);
}

TEST_CASE("hilbert polynomial fit") {
    Ring r = ring4();
    // A line in P^3: H = t + 1.
    GradedIdeal line(r, {Form::variable(r, 2), Form::variable(r, 3)});
    PolyFit f1 = hilbert_poly_fit(line, 8);
    CHECK(f1.dim == 1);
    CHECK(f1.degree == 1);
    CHECK(f1.sectional_genus == 0);

    PolyFit f2 = hilbert_poly_fit(twisted_cubic(), 9);
    CHECK(f2.dim == 1);
    CHECK(f2.degree == 3);
    CHECK(f2.sectional_genus == 0);

    // One quartic in P^4: threefold of degree 4, section a plane quartic.
    Ring r5{5, PrimeField()};
    SplitMix64 rng(5);
    GradedIdeal quartic(r5, {random_form(r5, 4, rng)});
    PolyFit f3 = hilbert_poly_fit(quartic, 12);
    CHECK(f3.dim == 3);
    CHECK(f3.degree == 4);
    CHECK(f3.sectional_genus == 3);

    CHECK_THROWS_AS(hilbert_poly_fit(twisted_cubic(), 3), Error);
}

TEST_CASE("betti_to_hilbert closed forms") {
    // One generator of degree 4 in P^4.
    BettiTable quartic;
    quartic.entries.push_back({1, 4, 1});
    CHECK(betti_to_hilbert(quartic, 5, 4) == binom(8, 4) - 1);
    CHECK(betti_to_hilbert(quartic, 5, 4) == 69);

    // Hilbert-Burch table of C^7_5: three cubics, syzygies at 4 and 5.
    BettiTable c75;
    c75.entries.push_back({1, 3, 3});
    c75.entries.push_back({2, 4, 1});
    c75.entries.push_back({2, 5, 1});
    CHECK(betti_to_hilbert(c75, 4, 4) == 24);

    // Eagon-Northcott table for (n=3, sigma=5) at t=5: 252 - (5*6 - 4) = 226.
    BettiTable en;
    en.entries.push_back({1, 4, 5});
    en.entries.push_back({2, 5, 4});
    CHECK(betti_to_hilbert(en, 6, 5) == 226);
}

TEST_CASE("betti_to_hilbert equals hilbert_function for a produced pair") {
    DegreeMatrix d;
    d.e = {{2, 2, 2}, {1, 1, 1}};
    auto m = sample_generic(d, 3, PrimeField(), 2);
    GradedIdeal ideal = variety_ideal(m);
    TwistData tw = twists_from_degree_matrix(d);
    BettiTable table;
    for (int t : tw.gen_twists) table.entries.push_back({1, t, 1});
    for (int t : tw.syz_twists) table.entries.push_back({2, t, 1});
    table.normalize();
    for (int t = 0; t <= 8; ++t) CHECK(betti_to_hilbert(table, 4, t) == ideal.hilbert(t));
}

TEST_CASE("monotonicity: (I)_t * R_1 lies inside (I)_{t+1}") {
    GradedIdeal tc = twisted_cubic();
    const Ring& r = tc.ring();
    for (int t = 2; t <= 5; ++t) {
        auto ech = tc.piece_echelon(t + 1);
        std::size_t base = ech->rank();
        CHECK(static_cast<long long>(base) == tc.piece_dimension(t + 1));
        // Multiply a spanning set of (I)_t by every variable; nothing new
        // may appear in degree t+1.
        MonomialBasis basis(r.vars, t + 1);
        for (const auto& g : tc.generators()) {
            if (g.degree() > t) continue;
            for (const auto& mult : monomials_of_degree(r.vars, t - g.degree())) {
                for (std::uint32_t v = 0; v < r.vars; ++v) {
                    Monomial shifted = mult;
                    shifted.e[v] = static_cast<std::uint16_t>(shifted.e[v] + 1);
                    auto row = basis.coefficient_row(g, shifted);
                    ech->add_row(row);
                }
            }
        }
        CHECK(ech->rank() == base);
    }
}

TEST_CASE("sigma of a generic plane section matches the curve") {
    DegreeMatrix d;
    d.e = {{2, 2, 2}, {1, 1, 1}};
    auto m = sample_generic(d, 3, PrimeField(), 1);
    auto section = plane_section(m, 7);
    GradedIdeal zi = variety_ideal(section);
    CHECK(sigma_invariant(zi, 7) == 4);
    PolyFit fit = hilbert_poly_fit(zi, 10);
    CHECK(fit.dim == 0);
    CHECK(fit.degree == 7); // deg Z = deg C
}

TEST_CASE("hilbert table shape") {
    GradedIdeal tc = twisted_cubic();
    auto table = hilbert_table(tc, 4, 2);
    REQUIRE(table.size() == 5);
    CHECK(table[2][0] == 2);
    CHECK(table[2][1] == 7);  // H(2)
    CHECK(table[2][2] == 3);  // delta H
    CHECK(table[4][3] == 0);  // delta^2 H at t = 4 >= sigma
}
