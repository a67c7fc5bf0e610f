#include <doctest.h>

#include "detblow/secants.hpp"

using namespace detblow;

namespace {

SecantSystem linear_system(int n, int sigma, std::uint64_t seed) {
    auto m = sample_generic(DegreeMatrix::all_linear(static_cast<std::size_t>(sigma)), n, PrimeField(), seed);
    return build_system(m);
}

} // namespace

TEST_CASE("build_system shapes for the twisted cubic") {
    SecantSystem s = linear_system(3, 2, 1);
    CHECK(s.z.rows() == 4);
    CHECK(s.z.cols() == 3);
    CHECK(s.z.ring().vars == 2);
    CHECK(s.nmat.rows() == 2);
    CHECK(s.nmat.cols() == 4);
    CHECK(s.nmat.ring().vars == 3);
}

TEST_CASE("single coefficient routing: L_11 = w_0") {
    Ring r{4, PrimeField()};
    FormMatrix mat(r, 2, 3);
    SplitMix64 rng(77);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) mat.set(i, j, random_form(r, 1, rng));
    mat.set(0, 0, Form::variable(r, 0));
    HilbertBurchMatrix m(DegreeMatrix::all_linear(2), mat, 3);
    SecantSystem s = build_system(m);
    // Z[k=0][j=0] picks up z_1 from delta^0_{11} = 1.
    Form z1 = Form::variable(s.z.ring(), 0);
    Monomial z1m(2);
    z1m.e[0] = 1;
    CHECK(s.z.at(0, 0).coefficient(z1m) == 1);
    // Nmat[i=0][k=0] picks up y_1.
    Monomial y1m(3);
    y1m.e[0] = 1;
    CHECK(s.nmat.at(0, 0).coefficient(y1m) == 1);
    (void)z1;
}

TEST_CASE("delta coefficients round-trip through Z and N") {
    auto m = sample_generic(DegreeMatrix::all_linear(4), 3, PrimeField(), 5);
    SecantSystem s = build_system(m);
    // delta^k_{ij} = coeff of w_k in L_ij = coeff of z_i in Z[k][j]
    //             = coeff of y_j in N[i][k].
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) {
            const Form& entry = m.entries().at(i, j);
            for (int k = 0; k < 4; ++k) {
                Monomial wk(4);
                wk.e[static_cast<std::size_t>(k)] = 1;
                std::uint64_t delta = entry.coefficient(wk);
                Monomial zi(4);
                zi.e[static_cast<std::size_t>(i)] = 1;
                CHECK(s.z.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)).coefficient(zi) ==
                      delta);
                Monomial yj(5);
                yj.e[static_cast<std::size_t>(j)] = 1;
                CHECK(s.nmat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)).coefficient(yj) ==
                      delta);
            }
        }
}

TEST_CASE("generic ranks of Z and N") {
    SecantSystem s = linear_system(3, 4, 1);
    CHECK(generic_rank(s.z, 3, 11) == 4);
    CHECK(generic_rank(s.nmat, 3, 11) == 4);
    Ring r{3, PrimeField()};
    FormMatrix zero(r, 2, 2);
    CHECK(generic_rank(zero, 2, 1) == 0);
}

TEST_CASE("(n=3, sigma=4): no lines, Gamma is 20 points") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        SecantSystem s = linear_system(3, 4, seed);
        RankLocusReport lines = line_locus(s);
        CHECK(lines.empty);
        RankLocusReport secants = secant_locus(s);
        CHECK(!secants.empty);
        CHECK(secants.dim == 0);
        CHECK(secants.degree == 20);
        CHECK(secants.codim == 4); // 2(sigma - n + 1)
    }
}

TEST_CASE("(n=3, sigma=3): a one-dimensional family of trisecants") {
    SecantSystem s = linear_system(3, 3, 1);
    RankLocusReport secants = secant_locus(s);
    CHECK(!secants.empty);
    CHECK(secants.dim == 1);
}

TEST_CASE("(n=3, sigma=5): no 5-secants") {
    SecantSystem s = linear_system(3, 5, 1);
    RankLocusReport secants = secant_locus(s);
    CHECK(secants.empty);
}

TEST_CASE("(n=5, sigma=5): the line locus is a point set of the right codim") {
    SecantSystem s = linear_system(5, 5, 1);
    RankLocusReport lines = line_locus(s);
    CHECK(!lines.empty);
    CHECK(lines.dim == 0);
    CHECK(lines.codim == 4); // 2 sigma - 2n + 4
}

TEST_CASE("(n=4, sigma=5): no lines") {
    SecantSystem s = linear_system(4, 5, 1);
    RankLocusReport lines = line_locus(s);
    CHECK(lines.empty);
}

TEST_CASE("secant witness for (n=3, sigma=4): a verified 4-secant") {
    SecantSystem s = linear_system(3, 4, 1);
    auto witness = find_secant_witness(s, 1);
    REQUIRE(witness.has_value());
    CHECK(witness->length == 4);
    auto len = intersection_length(s.source, witness->line);
    REQUIRE(len.has_value());
    CHECK(*len == 4);
    // The parameter really sits on Gamma: rank N(y) = n - 1 was verified by
    // secant_line_from_parameter; re-extract and compare.
    Line again = secant_line_from_parameter(s, witness->parameter);
    auto len2 = intersection_length(s.source, again);
    REQUIRE(len2.has_value());
    CHECK(*len2 == 4);
}

TEST_CASE("trisecant witness on the one-dimensional Gamma") {
    SecantSystem s = linear_system(3, 3, 2);
    auto witness = find_secant_witness(s, 7);
    REQUIRE(witness.has_value());
    CHECK(witness->length == 3);
}

TEST_CASE("secant_line_from_parameter rejects rank-n parameters") {
    SecantSystem s = linear_system(3, 4, 1);
    // A generic y has rank N(y) = 4 = n + 1... the centers sweep rank n too;
    // a random y almost surely has full rank 4, which must be rejected.
    std::vector<std::uint64_t> y{1, 2, 3, 4, 5};
    CHECK_THROWS_AS(secant_line_from_parameter(s, y), Error);
}

TEST_CASE("rational points of a split zero-dimensional ideal") {
    // Three coordinate points in P^2: ideal of 2x2 minors of a diagonal-ish
    // family; simplest: monomials xy, xz, yz cut {(1:0:0), (0:1:0), (0:0:1)}.
    Ring r{3, PrimeField()};
    Form x = Form::variable(r, 0), y = Form::variable(r, 1), z = Form::variable(r, 2);
    GradedIdeal ideal(r, {x * y, x * z, y * z});
    auto pts = rational_points(ideal, 8, 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(pts[1] == std::vector<std::uint64_t>{0, 1, 0});
    CHECK(pts[2] == std::vector<std::uint64_t>{1, 0, 0});
}
