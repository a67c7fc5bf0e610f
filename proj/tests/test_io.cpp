#include <doctest.h>

#include "detblow/report_io.hpp"

using namespace detblow;

TEST_CASE("matrix JSON round-trip") {
    DegreeMatrix d;
    d.e = {{2, 2, 2}, {1, 1, 1}};
    auto m = sample_generic(d, 3, PrimeField(), 1);
    Json j = matrix_to_json(m, 1);
    for (const char* key : {"p", "n", "rows", "cols", "degree_matrix", "entries", "seed"})
        CHECK(j.contains(key));
    HilbertBurchMatrix back = matrix_from_json(j);
    CHECK(back.n() == m.n());
    CHECK(back.degrees().e == m.degrees().e);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < 3; ++c) CHECK(back.entries().at(i, c) == m.entries().at(i, c));
}

TEST_CASE("matrix JSON rejects malformed input with cell coordinates") {
    Json j;
    j["p"] = 101;
    j["n"] = 3;
    j["rows"] = 2;
    j["cols"] = 3;
    j["degree_matrix"] = Json::array({Json::array({1, 1, 1}), Json::array({2, 1, 1})});
    j["entries"] = Json::array();
    try {
        matrix_from_json(j);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_input);
        CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
    }

    Json missing;
    missing["p"] = 101;
    CHECK_THROWS_AS(matrix_from_json(missing), Error);
}

TEST_CASE("canonical generator rendering is stable") {
    // Golden string: frozen after the first run; guards rendering changes.
    Ring r{4, PrimeField()};
    Form f = Form::variable(r, 0) * Form::variable(r, 0) -
             Form::variable(r, 1) * Form::variable(r, 3).scaled(2);
    CHECK(f.to_string(numbered_names("w", 4)) == "1*w0^2 + 2147483645*w1*w3");
}

TEST_CASE("variety report JSON carries the interface fields") {
    auto m = sample_generic(DegreeMatrix::all_linear(3), 3, PrimeField(), 1);
    VarietyReport rep = analyze(m);
    Json j = variety_report_to_json(rep);
    for (const char* key : {"n", "rho", "p", "degree_matrix", "deg", "dim", "sigma", "genus",
                            "gen_twists", "syz_twists", "hilbert"})
        CHECK(j.contains(key));
    CHECK(j["deg"] == 6);
    CHECK(j["genus"] == 3);

    std::string csv = hilbert_csv(rep);
    CHECK(csv.rfind("t,H,D1H,D2H", 0) == 0);
}

TEST_CASE("presentation JSON names variables x_h_j / y_l") {
    auto m = sample_bminimal(8, 3, PrimeField(), 1);
    BlowupPresentation pres = assemble_ideal(m, BlowupMode::sigma);
    Json j = presentation_to_json(pres, nullptr);
    auto names = j["variables"].get<std::vector<std::string>>();
    CHECK(names.front() == "x_0_1");
    CHECK(names.back() == "y_1");
    CHECK(j["counts"]["x_minors"] == 6);
    CHECK(j["counts"]["bx_entries"] == 4);
}
