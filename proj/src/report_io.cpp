#include "detblow/report_io.hpp"

#include <sstream>

namespace detblow {

std::vector<std::string> w_names(int n) { return numbered_names("w", static_cast<std::size_t>(n) + 1); }

Json matrix_to_json(const HilbertBurchMatrix& m, std::optional<std::uint64_t> seed) {
    Json j;
    j["p"] = m.ring().fp.p();
    j["n"] = m.n();
    j["rows"] = m.entries().rows();
    j["cols"] = m.entries().cols();
    j["degree_matrix"] = m.degrees().e;
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.entries().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < m.entries().cols(); ++jj) {
            Json terms = Json::array();
            for (const auto& [mono, c] : m.entries().at(i, jj).terms()) {
                Json term;
                term["monomial"] = mono.e;
                term["coeff"] = c;
                terms.push_back(std::move(term));
            }
            row.push_back(std::move(terms));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    if (seed) j["seed"] = *seed;
    return j;
}

HilbertBurchMatrix matrix_from_json(const Json& j) {
    for (const char* key : {"p", "n", "rows", "cols", "degree_matrix", "entries"})
        if (!j.contains(key)) fail(Errc::invalid_input, std::string("matrix JSON missing field '") + key + "'");
    PrimeField fp(j.at("p").get<std::uint64_t>());
    int n = j.at("n").get<int>();
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    DegreeMatrix deg;
    deg.e = j.at("degree_matrix").get<std::vector<std::vector<int>>>();
    if (deg.rows() != rows || deg.cols() != cols)
        fail(Errc::invalid_input, "degree_matrix shape disagrees with rows/cols");
    if (auto v = validate_degree_matrix(deg))
        fail(Errc::invalid_input, "invalid degree matrix at (" + std::to_string(v->i) + "," +
                                      std::to_string(v->j) + "): " + v->what);
    Ring ring{static_cast<std::uint32_t>(n + 1), fp};
    const Json& entries = j.at("entries");
    if (entries.size() != rows) fail(Errc::invalid_input, "entries row count mismatch");
    FormMatrix mat(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries.at(i);
        if (row.size() != cols) fail(Errc::invalid_input, "entries column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<std::pair<Monomial, std::uint64_t>> terms;
            for (const Json& term : row.at(c)) {
                Monomial mono;
                mono.e.clear();
                for (const Json& e : term.at("monomial")) mono.e.push_back(e.get<std::uint16_t>());
                if (mono.vars() != ring.vars)
                    fail(Errc::invalid_input, "monomial arity mismatch at entry (" + std::to_string(i + 1) +
                                                  "," + std::to_string(c + 1) + ")");
                terms.emplace_back(std::move(mono), term.at("coeff").get<std::uint64_t>());
            }
            mat.set(i, c, Form::from_terms(ring, deg.e[i][c], terms));
        }
    }
    return HilbertBurchMatrix(deg, std::move(mat), n);
}

Json variety_report_to_json(const VarietyReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["rho"] = rep.rho;
    j["p"] = rep.p;
    j["degree_matrix"] = rep.degree_matrix.e;
    j["deg"] = rep.degree;
    j["dim"] = rep.dim;
    j["sigma"] = rep.sigma;
    if (rep.genus)
        j["genus"] = *rep.genus;
    else
        j["genus"] = nullptr;
    j["gen_twists"] = rep.gen_twists;
    j["syz_twists"] = rep.syz_twists;
    j["hilbert"] = rep.hilbert;
    return j;
}

std::string variety_report_to_text(const VarietyReport& rep) {
    std::ostringstream out;
    out << "variety over F_" << rep.p << " in P^" << rep.n << ", rho = " << rep.rho << "\n";
    out << "deg = " << rep.degree << ", dim = " << rep.dim << ", sigma = " << rep.sigma;
    if (rep.genus) out << ", genus = " << *rep.genus;
    out << "\n";
    out << "generator twists:";
    for (int t : rep.gen_twists) out << " " << t;
    out << "\nsyzygy twists:";
    for (int t : rep.syz_twists) out << " " << t;
    out << "\n";
    std::size_t orders = rep.hilbert.empty() ? 0 : rep.hilbert.front().size() - 2;
    out << "t H";
    for (std::size_t k = 1; k <= orders; ++k) out << " D^" << k;
    out << "\n";
    for (const auto& row : rep.hilbert) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
        out << "\n";
    }
    return out.str();
}

std::string hilbert_csv(const VarietyReport& rep) {
    std::ostringstream out;
    out << "t,H";
    std::size_t orders = rep.hilbert.empty() ? 0 : rep.hilbert.front().size() - 2;
    for (std::size_t k = 1; k <= orders; ++k) out << ",D" << k << "H";
    out << "\n";
    for (const auto& row : rep.hilbert) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
        out << "\n";
    }
    return out.str();
}

Json locus_to_json(const RankLocusReport& rep) {
    Json j;
    j["target_rank"] = rep.target_rank;
    j["ambient"] = "P^" + std::to_string(rep.ambient_vars - 1);
    j["num_minors"] = rep.num_minors;
    j["minor_degree"] = rep.minor_degree;
    j["empty"] = rep.empty;
    j["certificate"] = certificate_name(rep.certificate);
    if (rep.empty) {
        j["fill_degree"] = rep.fill_degree;
    } else if (rep.dim_known) {
        j["dim"] = rep.dim;
        j["degree"] = rep.degree;
        j["codim"] = rep.codim;
    } else {
        j["dim"] = nullptr;
        j["nonempty_by_height_bound"] = rep.nonempty_by_height_bound;
    }
    return j;
}

std::string locus_to_text(const std::string& label, const RankLocusReport& rep) {
    std::ostringstream out;
    out << label << ": rank <= " << rep.target_rank << " locus in P^" << (rep.ambient_vars - 1) << ", "
        << rep.num_minors << " minors of degree " << rep.minor_degree << ": ";
    if (rep.empty && rep.certificate == LocusCertificate::fill)
        out << "empty (ideal fills at t = " << rep.fill_degree << ")";
    else if (rep.empty)
        out << "empty (slice certificate: generic slice fills at t = " << rep.fill_degree << ")";
    else if (rep.dim_known)
        out << "nonempty, dim = " << rep.dim << ", deg = " << rep.degree << ", codim = " << rep.codim;
    else
        out << "nonempty (height bound), dimension not computed within budget";
    out << "\n";
    return out.str();
}

Json betti_to_json(const BettiTable& table) {
    Json rows = Json::array();
    for (const auto& e : table.entries) rows.push_back(Json::array({e.index, e.twist, e.multiplicity}));
    return rows;
}

Json presentation_to_json(const BlowupPresentation& pres, const YReport* y) {
    Json j;
    j["mode"] = pres.shape.mode == BlowupMode::sigma ? "sigma" : "sigma_plus_one";
    j["type"] = Json{{"d", pres.shape.d}, {"k", pres.shape.k}};
    j["num_x"] = pres.psi.num_x;
    j["num_y"] = pres.psi.num_y;
    j["variables"] = pres.psi.names;
    j["ambient_dim"] = pres.ambient_dim;
    j["n_embed"] = pres.n_embed;
    Json gens;
    auto render = [&pres](const std::vector<Form>& forms) {
        Json arr = Json::array();
        for (const auto& f : forms) arr.push_back(f.to_string(pres.psi.names));
        return arr;
    };
    gens["x_minors"] = render(pres.x_minors);
    gens["bx_entries"] = render(pres.bx_entries);
    gens["b_minors"] = render(pres.b_minors);
    gens["linear"] = render(pres.h_forms);
    j["generators"] = std::move(gens);
    j["counts"] = Json{{"x_minors", pres.x_minors.size()},
                       {"bx_entries", pres.bx_entries.size()},
                       {"b_minors", pres.b_minors.size()},
                       {"linear", pres.h_forms.size()}};
    if (y) {
        Json yj;
        yj["n_embed"] = y->n_embed;
        yj["degree"] = y->degree;
        yj["sectional_genus"] = y->sectional_genus;
        yj["dim"] = y->dim;
        yj["hilbert"] = y->hilbert;
        if (y->betti_consistent) yj["betti_consistent"] = *y->betti_consistent;
        if (y->en_table) yj["en_betti_table"] = betti_to_json(*y->en_table);
        yj["low_degree_kernel_match"] = y->low_degree_kernel_match;
        j["analysis"] = std::move(yj);
    }
    return j;
}

std::string presentation_to_text(const BlowupPresentation& pres, const YReport* y) {
    std::ostringstream out;
    out << "blow-up presentation, mode " << (pres.shape.mode == BlowupMode::sigma ? "sigma" : "sigma+1")
        << ", type (" << pres.shape.d << "," << pres.shape.k << ")\n";
    out << "ambient P^" << pres.ambient_dim << " (" << pres.psi.num_x << " x-variables, " << pres.psi.num_y
        << " y-variables), Y sits in P^" << pres.n_embed << "\n";
    out << "generators: " << pres.x_minors.size() << " X-minors, " << pres.bx_entries.size()
        << " B*X entries, " << pres.b_minors.size() << " B-minors, " << pres.h_forms.size()
        << " linear forms\n";
    if (y) {
        out << "Y: degree " << y->degree << ", sectional genus " << y->sectional_genus << ", dim " << y->dim
            << "\n";
        if (y->betti_consistent)
            out << "Eagon-Northcott consistency: " << (*y->betti_consistent ? "true" : "false") << "\n";
    }
    return out.str();
}

Json profile_to_json(const BMinimalProfile& profile) {
    Json j;
    j["s"] = profile.s;
    j["d"] = profile.d;
    j["k"] = profile.k;
    j["sigma"] = profile.sigma;
    j["rho"] = profile.rho;
    j["gens_deg_d"] = profile.gens_deg_d;
    j["gens_deg_d1"] = profile.gens_deg_d1;
    j["template"] = profile.template_matrix.e;
    j["betti"] = betti_to_json(profile.betti);
    j["genus"] = profile.genus;
    return j;
}

Json linkage_to_json(const LinkageData& link) {
    Json j;
    j["a"] = link.a;
    j["b"] = link.b;
    j["deg_c"] = link.deg_c;
    j["g_c"] = link.g_c;
    j["deg_c_prime"] = link.deg_c_prime;
    j["g_c_prime"] = link.g_c_prime;
    return j;
}

} // namespace detblow
