#include <doctest.h>

#include "detblow/bminimal.hpp"
#include "detblow/blowup.hpp"

using namespace detblow;

namespace {

HilbertBurchMatrix ex1_matrix(std::uint64_t seed = 1) { return sample_bminimal(7, 3, PrimeField(), seed); }

} // namespace

TEST_CASE("classification of the B-minimal templates") {
    BlowupShape s1 = classify_blowup(ex1_matrix(), BlowupMode::sigma);
    CHECK(s1.d == 3);
    CHECK(s1.k == 1);
    CHECK(s1.num_f == 3);
    CHECK(s1.num_y == 0);
    CHECK(s1.mode_degree == 4);

    auto c63 = sample_bminimal(6, 3, PrimeField(), 1);
    BlowupShape s2 = classify_blowup(c63, BlowupMode::sigma_plus_one);
    CHECK(s2.d == 3);
    CHECK(s2.k == 0);
    CHECK(s2.num_f == 4);
    CHECK(s2.num_y == 0);

    BlowupShape s3 = classify_blowup(c63, BlowupMode::sigma);
    CHECK(s3.d == 2);
    CHECK(s3.k == 3);
    CHECK(s3.num_f == 0);
    CHECK(s3.num_y == 4);

    auto c87 = sample_bminimal(8, 3, PrimeField(), 1);
    BlowupShape s4 = classify_blowup(c87, BlowupMode::sigma);
    CHECK(s4.d == 3);
    CHECK(s4.k == 2);
    CHECK(s4.num_f == 2);
    CHECK(s4.num_y == 1);

    CHECK_THROWS_AS(classify_blowup(c87, BlowupMode::sigma_plus_one), Error);
}

TEST_CASE("psi: variable counts and the trivial syzygy") {
    auto m = ex1_matrix();
    BlowupShape shape = classify_blowup(m, BlowupMode::sigma);
    PsiMap psi = build_psi(m, shape);
    CHECK(psi.num_x == 12);
    CHECK(psi.num_y == 0);
    CHECK(psi.source.vars == 12);
    CHECK(psi.names[0] == "x_0_1");
    CHECK(psi.names[3] == "x_1_1");

    // psi(x_{01} x_{12} - x_{02} x_{11}) = w0 F1 w1 F2 - w0 F2 w1 F1 = 0,
    // with x_{hj} at index h * num_f + (j - 1).
    Form a = Form::variable(psi.source, 0 * 3 + 0) * Form::variable(psi.source, 1 * 3 + 1);
    Form b = Form::variable(psi.source, 0 * 3 + 1) * Form::variable(psi.source, 1 * 3 + 0);
    CHECK(psi.apply(a - b).is_zero());
    CHECK(!psi.apply(a).is_zero());

    auto c63 = sample_bminimal(6, 3, PrimeField(), 1);
    PsiMap psi63 = build_psi(c63, classify_blowup(c63, BlowupMode::sigma_plus_one));
    CHECK(psi63.num_x == 16);
    CHECK(psi63.num_y == 0);
}

TEST_CASE("X matrix shapes") {
    auto m = ex1_matrix();
    BlowupShape shape = classify_blowup(m, BlowupMode::sigma);
    FormMatrix x = build_x_matrix(build_psi(m, shape), shape);
    CHECK(x.rows() == 4);
    CHECK(x.cols() == 3);

    auto c63 = sample_bminimal(6, 3, PrimeField(), 1);
    BlowupShape s2 = classify_blowup(c63, BlowupMode::sigma_plus_one);
    FormMatrix x2 = build_x_matrix(build_psi(c63, s2), s2);
    CHECK(x2.rows() == 4);
    CHECK(x2.cols() == 4);
}

TEST_CASE("quadric coefficient extraction is a symmetric exact round-trip") {
    Ring r{4, PrimeField()};
    const PrimeField& fp = r.fp;
    // Q = w0 w1: off-diagonal halves; Q = w2^2: single diagonal entry.
    auto check_roundtrip = [&](const Form& q) {
        DegreeMatrix deg;
        deg.e = {{2, 2}};
        FormMatrix entries(r, 1, 2);
        entries.set(0, 0, q);
        SplitMix64 rng(3);
        entries.set(0, 1, random_form(r, 2, rng));
        HilbertBurchMatrix hb(deg, entries, 3);
        BlowupShape shape;
        shape.n = 3;
        shape.d = 2;
        shape.k = 1;
        shape.num_f = 2;
        shape.f_columns = {0, 1};
        shape.b_rows = {0};
        shape.mode_degree = 3;
        MatrixCoefficients mc = extract_coefficients(hb, shape);
        // Reconstruct sum beta^{u0j}_h w_h w_i and compare with q.
        Form rebuilt(r, 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t h = 0; h < 4; ++h) {
                std::uint64_t c = mc.beta[0][0][i][h];
                if (!c) continue;
                Monomial mono(4);
                mono.e[h] = static_cast<std::uint16_t>(mono.e[h] + 1);
                mono.e[i] = static_cast<std::uint16_t>(mono.e[i] + 1);
                rebuilt.add_term(mono, c);
            }
        CHECK(rebuilt == q);
        // Symmetry of the split.
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t h = 0; h < 4; ++h) CHECK(mc.beta[0][0][i][h] == mc.beta[0][0][h][i]);
    };

    Form w0w1 = Form::variable(r, 0) * Form::variable(r, 1);
    check_roundtrip(w0w1);
    Monomial m22(4);
    m22.e[2] = 2;
    Form w2sq = Form::from_terms(r, 2, {{m22, 1}});
    check_roundtrip(w2sq);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 5; ++trial) check_roundtrip(random_form(r, 2, rng));
    CHECK(fp.p() % 2 == 1);
}

TEST_CASE("B shapes and the expansion contract") {
    auto m = ex1_matrix();
    BlowupShape shape = classify_blowup(m, BlowupMode::sigma);
    PsiMap psi = build_psi(m, shape);
    FormMatrix b = build_b_matrix(m, shape, psi); // throws if the contract fails
    CHECK(b.rows() == 1);
    CHECK(b.cols() == 4);

    auto c87 = sample_bminimal(8, 3, PrimeField(), 1);
    BlowupShape s87 = classify_blowup(c87, BlowupMode::sigma);
    PsiMap psi87 = build_psi(c87, s87);
    FormMatrix b87 = build_b_matrix(c87, s87, psi87);
    CHECK(b87.rows() == 2);
    CHECK(b87.cols() == 4);

    // All-linear sigma mode: B is sigma x 4 built from deltas only.
    auto lin = sample_generic(DegreeMatrix::all_linear(4), 3, PrimeField(), 1);
    BlowupShape slin = classify_blowup(lin, BlowupMode::sigma);
    PsiMap psilin = build_psi(lin, slin);
    FormMatrix blin = build_b_matrix(lin, slin, psilin);
    CHECK(blin.rows() == 4);
    CHECK(blin.cols() == 4);
}

TEST_CASE("linear kernel of psi") {
    auto m = ex1_matrix();
    BlowupShape shape = classify_blowup(m, BlowupMode::sigma);
    auto h = build_h_forms(build_psi(m, shape), shape);
    CHECK(h.size() == 1); // d - 2k = 1

    auto c87 = sample_bminimal(8, 3, PrimeField(), 1);
    BlowupShape s87 = classify_blowup(c87, BlowupMode::sigma);
    CHECK(build_h_forms(build_psi(c87, s87), s87).empty()); // d <= 2k

    // Type (4,1): s = 11, d - 2k = 2.
    auto t41 = sample_bminimal(11, 3, PrimeField(), 1);
    BlowupShape s41 = classify_blowup(t41, BlowupMode::sigma);
    CHECK(s41.d == 4);
    CHECK(s41.k == 1);
    CHECK(build_h_forms(build_psi(t41, s41), s41).size() == 2);
}

TEST_CASE("assembled Example 1 presentation") {
    BlowupPresentation pres = assemble_ideal(ex1_matrix(), BlowupMode::sigma);
    CHECK(pres.x_minors.size() == 18);
    CHECK(pres.bx_entries.size() == 3);
    CHECK(pres.b_minors.empty());
    CHECK(pres.h_forms.size() == 1);
    CHECK(pres.ambient_dim == 11);
    CHECK(pres.n_embed == 10);
    CHECK(pres.generators.generators().size() == 22);
}

TEST_CASE("assembled Example 2 presentation: 36 quadrics in P^12") {
    auto c63 = sample_bminimal(6, 3, PrimeField(), 1);
    BlowupPresentation pres = assemble_ideal(c63, BlowupMode::sigma_plus_one);
    CHECK(pres.x_minors.size() == 36);
    CHECK(pres.bx_entries.empty());
    CHECK(pres.b_minors.empty());
    CHECK(pres.h_forms.size() == 3);
    CHECK(pres.n_embed == 12);
    CHECK(pres.ambient_dim == 15);
}

TEST_CASE("all-linear sigma mode: the Eagon-Northcott regime") {
    auto lin = sample_generic(DegreeMatrix::all_linear(4), 3, PrimeField(), 1);
    BlowupPresentation pres = assemble_ideal(lin, BlowupMode::sigma);
    CHECK(pres.x_minors.empty());
    CHECK(pres.bx_entries.empty());
    CHECK(pres.b_minors.size() == 1); // C(4,4) quartics
    CHECK(pres.h_forms.empty());
    CHECK(pres.n_embed == 4);
    YReport y = analyze_Y(pres);
    REQUIRE(y.betti_consistent.has_value());
    CHECK(*y.betti_consistent);
    CHECK(y.dim == 3);
    CHECK(y.degree == 4); // a quartic threefold in P^4
}

TEST_CASE("Eagon-Northcott betti tables") {
    BettiTable t34 = en_betti_table(3, 4);
    REQUIRE(t34.entries.size() == 1);
    CHECK(t34.entries[0].index == 1);
    CHECK(t34.entries[0].twist == 4);
    CHECK(t34.entries[0].multiplicity == 1);

    BettiTable t35 = en_betti_table(3, 5);
    REQUIRE(t35.entries.size() == 2);
    CHECK(t35.entries[0].twist == 4);
    CHECK(t35.entries[0].multiplicity == 5);
    CHECK(t35.entries[1].twist == 5);
    CHECK(t35.entries[1].multiplicity == 4);

    BettiTable t46 = en_betti_table(4, 6);
    REQUIRE(t46.entries.size() == 2);
    CHECK(t46.entries[0].twist == 5);
    CHECK(t46.entries[0].multiplicity == 6);
    CHECK(t46.entries[1].twist == 6);
    CHECK(t46.entries[1].multiplicity == 5);

    CHECK_THROWS_AS(en_betti_table(3, 3), Error);
}

TEST_CASE("analyze_Y on Example 1: (10, 16, 9)") {
    BlowupPresentation pres = assemble_ideal(ex1_matrix(), BlowupMode::sigma);
    YReport y = analyze_Y(pres);
    CHECK(y.n_embed == 10);
    CHECK(y.dim == 3);
    CHECK(y.degree == 16);
    CHECK(y.sectional_genus == 9);
    CHECK(y.low_degree_kernel_match);
}

TEST_CASE("Prop 3.6 presentation for the degree-11 surface in P^4") {
    DegreeMatrix d;
    d.e = {{2, 2, 2, 2}, {1, 1, 1, 1}, {1, 1, 1, 1}};
    auto m = sample_with_retries(d, 4, PrimeField(), 1);
    BlowupShape shape = classify_blowup(m, BlowupMode::sigma);
    CHECK(shape.d == 4);
    CHECK(shape.k == 1);
    CHECK(shape.num_f == 4);
    BlowupPresentation pres = assemble_ideal(m, BlowupMode::sigma);
    CHECK(pres.x_matrix.rows() == 5);
    CHECK(pres.x_matrix.cols() == 4);
    CHECK(pres.b_matrix.rows() == 1);
    CHECK(pres.b_matrix.cols() == 5);
    CHECK(pres.h_forms.size() == 2); // d - 2k
    // Every generator is psi-annihilated (assemble_ideal verifies); spot-check.
    for (const auto& g : pres.generators.generators()) CHECK(pres.psi.apply(g).is_zero());
}
