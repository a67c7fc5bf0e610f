#include "detblow/hilburch.hpp"

#include <algorithm>

namespace detblow {

DegreeMatrix DegreeMatrix::all_linear(std::size_t sigma) {
    DegreeMatrix d;
    d.e.assign(sigma, std::vector<int>(sigma + 1, 1));
    return d;
}

bool DegreeMatrix::is_all_linear() const {
    for (const auto& row : e)
        for (int v : row)
            if (v != 1) return false;
    return !e.empty();
}

std::optional<DegreeViolation> validate_degree_matrix(const DegreeMatrix& d) {
    if (d.rows() == 0 || d.cols() != d.rows() + 1)
        return DegreeViolation{0, 0, "shape must be rho x (rho+1)"};
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (d.e[i].size() != d.cols()) return DegreeViolation{i + 1, 0, "ragged row"};
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (d.e[i][j] < 1) return DegreeViolation{i + 1, j + 1, "entry degree below 1"};
            if (d.e[i][j] != d.e[i][0] + d.e[0][j] - d.e[0][0])
                return DegreeViolation{i + 1, j + 1, "additivity e[i][j] = e[i][1] + e[1][j] - e[1][1] violated"};
        }
    }
    return std::nullopt;
}

TwistData twists_from_degree_matrix(const DegreeMatrix& d) {
    if (auto v = validate_degree_matrix(d))
        fail(Errc::invalid_input, "invalid degree matrix at (" + std::to_string(v->i) + "," +
                                      std::to_string(v->j) + "): " + v->what);
    TwistData t;
    // e[i][j] = u_i + v_j with min(u) = 0: u_i = e[i][0] - min_i e[i][0].
    int min_row = d.e[0][0];
    for (std::size_t i = 0; i < d.rows(); ++i) min_row = std::min(min_row, d.e[i][0]);
    for (std::size_t i = 0; i < d.rows(); ++i) t.u.push_back(d.e[i][0] - min_row);
    for (std::size_t j = 0; j < d.cols(); ++j) t.v.push_back(d.e[0][j] - t.u[0]);
    t.S = 0;
    for (int x : t.u) t.S += x;
    for (int x : t.v) t.S += x;
    for (std::size_t j = 0; j < d.cols(); ++j) t.gen_twists.push_back(t.S - t.v[j]);
    for (std::size_t i = 0; i < d.rows(); ++i) t.syz_twists.push_back(t.S + t.u[i]);
    return t;
}

long long degree_from_twists(const TwistData& t) {
    long long s = 0;
    for (int n : t.syz_twists) s += static_cast<long long>(n) * n;
    for (int d : t.gen_twists) s -= static_cast<long long>(d) * d;
    return s / 2;
}

long long genus_from_twists(const std::vector<int>& syz_twists, const std::vector<int>& gen_twists) {
    long long g = 0;
    for (int n : syz_twists) g += binom(n - 1, 3);
    for (int d : gen_twists) g -= binom(d - 1, 3);
    return g;
}

HilbertBurchMatrix::HilbertBurchMatrix(DegreeMatrix degrees, FormMatrix entries, int n)
    : degrees_(std::move(degrees)), entries_(std::move(entries)), n_(n) {
    if (auto v = validate_degree_matrix(degrees_))
        fail(Errc::invalid_input, "invalid degree matrix at (" + std::to_string(v->i) + "," +
                                      std::to_string(v->j) + "): " + v->what);
    if (entries_.rows() != degrees_.rows() || entries_.cols() != degrees_.cols())
        fail(Errc::invalid_input, "entry matrix shape disagrees with degree matrix");
    if (entries_.ring().vars != static_cast<std::uint32_t>(n_ + 1))
        fail(Errc::invalid_input, "entries must live over k[w_0..w_n]");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j) {
            const Form& f = entries_.at(i, j);
            if (!f.is_zero() && f.degree() != degrees_.e[i][j])
                fail(Errc::invalid_input, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                              ") degree disagrees with degree matrix");
        }
}

HilbertBurchMatrix sample_generic(const DegreeMatrix& d, int n, const PrimeField& fp, std::uint64_t seed) {
    if (auto v = validate_degree_matrix(d))
        fail(Errc::invalid_input, "invalid degree matrix at (" + std::to_string(v->i) + "," +
                                      std::to_string(v->j) + "): " + v->what);
    Ring ring{static_cast<std::uint32_t>(n + 1), fp};
    SplitMix64 rng(seed);
    FormMatrix entries(ring, d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) entries.set(i, j, random_form(ring, d.e[i][j], rng));
    return HilbertBurchMatrix(d, std::move(entries), n);
}

GradedIdeal variety_ideal(const HilbertBurchMatrix& m) {
    auto minors = maximal_minors(m.entries());
    TwistData tw = twists_from_degree_matrix(m.degrees());
    for (std::size_t j = 0; j < minors.size(); ++j) {
        if (minors[j].is_zero())
            fail(Errc::degenerate, "degenerate matrix: maximal minor " + std::to_string(j + 1) +
                                       " vanishes identically");
        if (minors[j].degree() != tw.gen_twists[j])
            fail(Errc::invalid_input, "minor degree disagrees with twist arithmetic");
    }
    return GradedIdeal(m.ring(), std::move(minors));
}

Line make_line(const PrimeField& fp, std::vector<std::uint64_t> p, std::vector<std::uint64_t> q) {
    if (p.size() != q.size() || p.size() < 2) fail(Errc::invalid_input, "line needs two points of equal arity");
    for (auto& c : p) c %= fp.p();
    for (auto& c : q) c %= fp.p();
    std::vector<std::vector<std::uint32_t>> rows(2, std::vector<std::uint32_t>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) {
        rows[0][k] = static_cast<std::uint32_t>(p[k]);
        rows[1][k] = static_cast<std::uint32_t>(q[k]);
    }
    if (matrix_rank(fp, rows, p.size()) != 2) fail(Errc::invalid_input, "line points are proportional");
    return Line{std::move(p), std::move(q)};
}

Line random_line(const PrimeField& fp, int n, SplitMix64& rng) {
    for (;;) {
        std::vector<std::uint64_t> p, q;
        for (int k = 0; k <= n; ++k) p.push_back(rng.below(fp.p()));
        for (int k = 0; k <= n; ++k) q.push_back(rng.below(fp.p()));
        std::vector<std::vector<std::uint32_t>> rows(2, std::vector<std::uint32_t>(p.size()));
        for (std::size_t k = 0; k < p.size(); ++k) {
            rows[0][k] = static_cast<std::uint32_t>(p[k]);
            rows[1][k] = static_cast<std::uint32_t>(q[k]);
        }
        if (matrix_rank(fp, rows, p.size()) == 2) return Line{std::move(p), std::move(q)};
    }
}

Form restrict_form(const Form& f, const Line& line) {
    Ring binary{2, f.ring().fp};
    const PrimeField& fp = f.ring().fp;
    std::vector<Form> images;
    for (std::size_t k = 0; k < line.p.size(); ++k) {
        Form img(binary, 1);
        Monomial s(2), t(2);
        s.e[0] = 1;
        t.e[1] = 1;
        img.add_term(s, line.p[k] % fp.p());
        img.add_term(t, line.q[k] % fp.p());
        images.push_back(std::move(img));
    }
    return f.substitute_linear(images);
}

FormMatrix restrict_to_line(const FormMatrix& m, const Line& line) {
    Ring binary{2, m.ring().fp};
    FormMatrix out(binary, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, restrict_form(m.at(i, j), line));
    return out;
}

namespace {

std::vector<Form> restricted_minors(const HilbertBurchMatrix& m, const Line& line) {
    if (line.p.size() != m.ring().vars) fail(Errc::invalid_input, "line arity disagrees with ambient space");
    return maximal_minors(restrict_to_line(m.entries(), line));
}

} // namespace

std::optional<long long> intersection_length(const HilbertBurchMatrix& m, const Line& line) {
    auto minors = restricted_minors(m, line);
    bool all_zero = std::all_of(minors.begin(), minors.end(), [](const Form& f) { return f.is_zero(); });
    if (all_zero) return std::nullopt;
    return binary_gcd(minors).degree();
}

LineIntersection points_on_line(const HilbertBurchMatrix& m, const Line& line) {
    auto minors = restricted_minors(m, line);
    bool all_zero = std::all_of(minors.begin(), minors.end(), [](const Form& f) { return f.is_zero(); });
    if (all_zero) fail(Errc::invalid_input, "line is contained in the variety");
    Form g = binary_gcd(minors);
    LineIntersection out;
    if (g.degree() == 0) return out;
    const PrimeField& fp = m.ring().fp;
    BinaryRoots roots = binary_roots(g);
    for (const auto& [st, mult] : roots.points) {
        std::vector<std::uint64_t> pt(line.p.size());
        for (std::size_t k = 0; k < pt.size(); ++k)
            pt[k] = fp.add(fp.mul(st.first, line.p[k]), fp.mul(st.second, line.q[k]));
        // Canonical scaling: first nonzero coordinate = 1.
        std::uint64_t lead = 0;
        for (auto c : pt)
            if (c) {
                lead = c;
                break;
            }
        if (lead) {
            std::uint64_t inv = fp.inv(lead);
            for (auto& c : pt) c = fp.mul(c, inv);
        }
        out.points.emplace_back(std::move(pt), mult);
    }
    out.irrational_degree = roots.irrational_degree;
    return out;
}

VarietyReport analyze(const HilbertBurchMatrix& m, const Caps& caps) {
    VarietyReport rep;
    rep.n = m.n();
    rep.rho = m.rho();
    rep.degree_matrix = m.degrees();
    rep.p = m.ring().fp.p();
    TwistData tw = twists_from_degree_matrix(m.degrees());
    rep.gen_twists = tw.gen_twists;
    rep.syz_twists = tw.syz_twists;
    GradedIdeal ideal = variety_ideal(m);
    int maxdeg = ideal.max_generator_degree();
    rep.sigma = sigma_invariant(ideal, caps.sigma_cap(maxdeg));
    PolyFit fit = hilbert_poly_fit(ideal, caps.fit_cap(maxdeg));
    rep.degree = fit.degree;
    rep.dim = fit.dim;
    rep.fit_stabilized_at = fit.stabilized_at;
    if (rep.n == 3 && fit.dim == 1) rep.genus = genus_from_twists(tw.syz_twists, tw.gen_twists);
    int orders = std::max(1, rep.n - 1);
    int table_max = std::max(rep.sigma + 1, fit.stabilized_at + 2);
    rep.hilbert = hilbert_table(ideal, table_max, orders);
    return rep;
}

HilbertBurchMatrix plane_section(const HilbertBurchMatrix& m, std::uint64_t seed) {
    int n = m.n();
    if (n < 3) fail(Errc::invalid_input, "plane section needs ambient dimension >= 3");
    const PrimeField& fp = m.ring().fp;
    Ring target{3, fp};
    SplitMix64 rng(seed ^ 0x5ec71a11u);
    // w_k -> random linear form in 3 variables: a seeded generic plane.
    std::vector<Form> images;
    for (std::uint32_t k = 0; k < m.ring().vars; ++k) images.push_back(random_form(target, 1, rng));
    FormMatrix cut(target, m.entries().rows(), m.entries().cols());
    for (std::size_t i = 0; i < cut.rows(); ++i)
        for (std::size_t j = 0; j < cut.cols(); ++j)
            cut.set(i, j, m.entries().at(i, j).substitute_linear(images));
    return HilbertBurchMatrix(m.degrees(), std::move(cut), 2);
}

} // namespace detblow
