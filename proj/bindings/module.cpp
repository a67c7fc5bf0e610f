// Python bindings: the main operations, bridged through the same JSON
// reports the CLI emits so both surfaces stay in lockstep.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detblow/parallel.hpp"
#include "detblow/report_io.hpp"

namespace py = pybind11;
using namespace detblow;

namespace {

HilbertBurchMatrix matrix_from_arg(const std::string& matrix_json) {
    return matrix_from_json(Json::parse(matrix_json));
}

Caps caps_from(int max_degree) {
    Caps caps;
    caps.max_degree = max_degree;
    return caps;
}

std::string sample_json(const std::string& kind, long long s_or_sigma, int n, std::uint64_t p,
                        std::uint64_t seed) {
    PrimeField fp(p);
    if (kind == "bminimal") return matrix_to_json(sample_bminimal(s_or_sigma, n, fp, seed), seed).dump();
    if (kind == "linear")
        return matrix_to_json(
                   sample_with_retries(DegreeMatrix::all_linear(static_cast<std::size_t>(s_or_sigma)), n,
                                       fp, seed),
                   seed)
            .dump();
    fail(Errc::invalid_input, "kind must be 'bminimal' or 'linear'");
}

std::string sample_degrees_json(const std::vector<std::vector<int>>& degrees, int n, std::uint64_t p,
                                std::uint64_t seed) {
    DegreeMatrix d;
    d.e = degrees;
    PrimeField fp(p);
    return matrix_to_json(sample_with_retries(d, n, fp, seed), seed).dump();
}

std::string analyze_json(const std::string& matrix_json, int max_degree) {
    return variety_report_to_json(analyze(matrix_from_arg(matrix_json), caps_from(max_degree))).dump();
}

std::string secant_loci_json(const std::string& matrix_json, int max_degree) {
    SecantSystem s = build_system(matrix_from_arg(matrix_json));
    Caps caps = caps_from(max_degree);
    Json j;
    j["n"] = s.n;
    j["sigma"] = s.sigma;
    j["lines"] = locus_to_json(line_locus(s, caps));
    j["secants"] = locus_to_json(secant_locus(s, caps));
    return j.dump();
}

std::string secant_witness_json(const std::string& matrix_json, std::uint64_t seed, int max_degree) {
    SecantSystem s = build_system(matrix_from_arg(matrix_json));
    auto w = find_secant_witness(s, seed, caps_from(max_degree));
    Json j;
    if (w) {
        j["parameter"] = w->parameter;
        j["line"] = Json::array({w->line.p, w->line.q});
        j["length"] = w->length;
    } else {
        j = nullptr;
    }
    return j.dump();
}

std::string blowup_json(const std::string& matrix_json, const std::string& mode, int max_degree) {
    BlowupMode m = mode == "sigma_plus_one" ? BlowupMode::sigma_plus_one : BlowupMode::sigma;
    if (mode != "sigma" && mode != "sigma_plus_one")
        fail(Errc::invalid_input, "mode must be 'sigma' or 'sigma_plus_one'");
    BlowupPresentation pres = assemble_ideal(matrix_from_arg(matrix_json), m);
    YReport y = analyze_Y(pres, caps_from(max_degree));
    return presentation_to_json(pres, &y).dump();
}

std::string line_length_json(const std::string& matrix_json, const std::vector<long long>& p_coords,
                             const std::vector<long long>& q_coords) {
    HilbertBurchMatrix m = matrix_from_arg(matrix_json);
    const PrimeField& fp = m.ring().fp;
    std::vector<std::uint64_t> p, q;
    for (long long c : p_coords) p.push_back(fp.from_int(c));
    for (long long c : q_coords) q.push_back(fp.from_int(c));
    Line line = make_line(fp, p, q);
    auto len = intersection_length(m, line);
    Json j;
    j["contained"] = !len.has_value();
    if (len) j["length"] = *len;
    return j.dump();
}

std::string profile_json(long long s) { return profile_to_json(profile_from_degree(s)).dump(); }

std::string residual_json(long long a, long long b, long long deg_c, long long g_c) {
    return linkage_to_json(residual(a, b, deg_c, g_c)).dump();
}

std::string en_table_json(int n, int sigma) { return betti_to_json(en_betti_table(n, sigma)).dump(); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact determinantal geometry over prime fields";

    py::register_exception<Error>(m, "DetblowError");

    m.def("sample", &sample_json, py::arg("kind"), py::arg("value"), py::arg("n") = 3,
          py::arg("p") = kDefaultPrime, py::arg("seed") = 1,
          "Sample a matrix ('bminimal' of degree s, or 'linear' of size sigma); returns matrix JSON.");
    m.def("sample_degree_matrix", &sample_degrees_json, py::arg("degrees"), py::arg("n") = 3,
          py::arg("p") = kDefaultPrime, py::arg("seed") = 1);
    m.def("analyze", &analyze_json, py::arg("matrix_json"), py::arg("max_degree") = 0);
    m.def("secant_loci", &secant_loci_json, py::arg("matrix_json"), py::arg("max_degree") = 0);
    m.def("secant_witness", &secant_witness_json, py::arg("matrix_json"), py::arg("seed") = 1,
          py::arg("max_degree") = 0);
    m.def("blowup", &blowup_json, py::arg("matrix_json"), py::arg("mode") = "sigma",
          py::arg("max_degree") = 0);
    m.def("line_length", &line_length_json, py::arg("matrix_json"), py::arg("p"), py::arg("q"));
    m.def("bminimal_profile", &profile_json, py::arg("s"));
    m.def("residual", &residual_json, py::arg("a"), py::arg("b"), py::arg("deg_c"), py::arg("g_c"));
    m.def("en_betti_table", &en_table_json, py::arg("n"), py::arg("sigma"));
    m.def("genus_minimal", &genus_minimal, py::arg("s"));
    m.def("thread_budget", &thread_budget);
}
