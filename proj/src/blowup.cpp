#include "detblow/blowup.hpp"

#include <algorithm>

namespace detblow {

namespace {

bool row_is(const std::vector<int>& row, int value) {
    return std::all_of(row.begin(), row.end(), [value](int x) { return x == value; });
}

} // namespace

BlowupShape classify_blowup(const HilbertBurchMatrix& m, BlowupMode mode) {
    const DegreeMatrix& d = m.degrees();
    std::size_t rho = d.rows(), cols = d.cols();
    BlowupShape shape;
    shape.n = m.n();
    shape.mode = mode;

    if (mode == BlowupMode::sigma_plus_one) {
        if (!d.is_all_linear())
            fail(Errc::invalid_input, "sigma+1 construction needs an all-linear matrix");
        shape.d = static_cast<int>(rho);
        shape.k = 0;
        shape.num_f = static_cast<int>(cols);
        shape.num_y = 0;
        for (std::size_t j = 0; j < cols; ++j) shape.f_columns.push_back(j);
        shape.mode_degree = shape.d + 1;
        return shape;
    }

    if (d.is_all_linear()) {
        // Remark-1 regime: type (sigma - 1, sigma); every minor is a G_l.
        shape.d = static_cast<int>(rho) - 1;
        shape.k = static_cast<int>(rho);
        shape.num_f = 0;
        shape.num_y = static_cast<int>(cols);
        for (std::size_t j = 0; j < cols; ++j) shape.g_columns.push_back(j);
        for (std::size_t i = 0; i < rho; ++i) shape.b_rows.push_back(i);
        shape.mode_degree = shape.d + 1;
        return shape;
    }

    bool rows_uniform = true;
    for (std::size_t i = 1; i < rho && rows_uniform; ++i) rows_uniform = d.e[i] == d.e[0];
    if (rows_uniform) {
        // d <= 2k template: k rows of [1 x (2k-d), 2 x (d-k+1)].
        std::size_t lin = 0;
        while (lin < cols && d.e[0][lin] == 1) ++lin;
        for (std::size_t j = lin; j < cols; ++j)
            if (d.e[0][j] != 2) fail(Errc::invalid_input, "degree matrix is not a B-minimal template");
        int k = static_cast<int>(rho);
        int dd = 2 * k - static_cast<int>(lin);
        if (dd < k || dd > 2 * k || static_cast<int>(cols - lin) != dd - k + 1)
            fail(Errc::invalid_input, "degree matrix is not a B-minimal template");
        shape.d = dd;
        shape.k = k;
        shape.num_f = dd - k + 1;
        shape.num_y = 2 * k - dd;
        for (std::size_t j = 0; j < lin; ++j) shape.g_columns.push_back(j);
        for (std::size_t j = lin; j < cols; ++j) shape.f_columns.push_back(j);
        for (std::size_t i = 0; i < rho; ++i) shape.b_rows.push_back(i);
        shape.mode_degree = shape.d + 1;
        return shape;
    }

    // d >= 2k template: k all-quadric rows followed by d-2k all-linear rows.
    std::size_t quad = 0;
    while (quad < rho && row_is(d.e[quad], 2)) ++quad;
    for (std::size_t i = quad; i < rho; ++i)
        if (!row_is(d.e[i], 1)) fail(Errc::invalid_input, "degree matrix is not a B-minimal template");
    int k = static_cast<int>(quad);
    int dd = 2 * k + static_cast<int>(rho - quad);
    if (k < 1 || static_cast<int>(cols) != dd - k + 1)
        fail(Errc::invalid_input, "degree matrix is not a B-minimal template");
    shape.d = dd;
    shape.k = k;
    shape.num_f = dd - k + 1;
    shape.num_y = 0;
    for (std::size_t j = 0; j < cols; ++j) shape.f_columns.push_back(j);
    for (std::size_t i = 0; i < quad; ++i) shape.b_rows.push_back(i);
    shape.mode_degree = shape.d + 1;
    return shape;
}

Form PsiMap::apply(const Form& f) const {
    if (f.ring() != source) fail(Errc::invalid_input, "psi applied to a form over the wrong ring");
    Form out(target, f.degree() * (images.empty() ? 1 : images.front().degree()));
    std::vector<std::vector<Form>> powers(images.size());
    auto power_of = [&](std::size_t v, unsigned e) -> const Form& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Form::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    for (const auto& [m, c] : f.terms()) {
        Form t = Form::constant(target, c);
        for (std::size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v]) t = t * power_of(v, m.e[v]);
        if (!t.is_zero())
            for (const auto& [mm, cc] : t.terms()) out.add_term(mm, cc);
    }
    return out;
}

PsiMap build_psi(const HilbertBurchMatrix& m, const BlowupShape& shape) {
    auto minors = maximal_minors(m.entries());
    TwistData tw = twists_from_degree_matrix(m.degrees());
    PsiMap psi;
    psi.target = m.ring();
    int n = shape.n;
    psi.num_x = (n + 1) * shape.num_f;
    psi.num_y = shape.num_y;
    psi.source = Ring{static_cast<std::uint32_t>(psi.num_x + psi.num_y), m.ring().fp};
    for (int h = 0; h <= n; ++h) {
        Form wh = Form::variable(psi.target, static_cast<std::size_t>(h));
        for (int j = 0; j < shape.num_f; ++j) {
            const Form& fj = minors[shape.f_columns[static_cast<std::size_t>(j)]];
            if (fj.is_zero() || fj.degree() != shape.d)
                fail(Errc::invalid_input, "generator degrees disagree with the B-minimal split");
            psi.images.push_back(wh * fj);
            psi.names.push_back("x_" + std::to_string(h) + "_" + std::to_string(j + 1));
        }
    }
    for (int l = 0; l < shape.num_y; ++l) {
        const Form& gl = minors[shape.g_columns[static_cast<std::size_t>(l)]];
        if (gl.is_zero() || gl.degree() != shape.d + 1)
            fail(Errc::invalid_input, "generator degrees disagree with the B-minimal split");
        psi.images.push_back(gl);
        psi.names.push_back("y_" + std::to_string(l + 1));
    }
    (void)tw;
    return psi;
}

FormMatrix build_x_matrix(const PsiMap& psi, const BlowupShape& shape) {
    int n = shape.n;
    FormMatrix x(psi.source, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(shape.num_f));
    for (int h = 0; h <= n; ++h)
        for (int j = 0; j < shape.num_f; ++j)
            x.set(static_cast<std::size_t>(h), static_cast<std::size_t>(j),
                  Form::variable(psi.source, static_cast<std::size_t>(h * shape.num_f + j)));
    return x;
}

MatrixCoefficients extract_coefficients(const HilbertBurchMatrix& m, const BlowupShape& shape) {
    const PrimeField& fp = m.ring().fp;
    std::size_t vars = m.ring().vars;
    MatrixCoefficients out;
    for (std::size_t u : shape.b_rows) {
        std::vector<std::vector<std::uint64_t>> delta_row;
        for (std::size_t l : shape.g_columns) {
            const Form& lin = m.entries().at(u, l);
            std::vector<std::uint64_t> coeffs(vars, 0);
            for (const auto& [mono, c] : lin.terms())
                for (std::size_t v = 0; v < vars; ++v)
                    if (mono.e[v]) coeffs[v] = c;
            delta_row.push_back(std::move(coeffs));
        }
        out.delta.push_back(std::move(delta_row));

        std::vector<std::vector<std::vector<std::uint64_t>>> beta_row;
        for (std::size_t j : shape.f_columns) {
            const Form& quad = m.entries().at(u, j);
            if (!quad.is_zero() && quad.degree() != 2)
                fail(Errc::invalid_input, "expected a quadric entry in the F-columns");
            std::vector<std::vector<std::uint64_t>> beta(vars, std::vector<std::uint64_t>(vars, 0));
            for (const auto& [mono, c] : quad.terms()) {
                int first = -1, second = -1;
                for (std::size_t v = 0; v < vars; ++v) {
                    if (mono.e[v] == 2) first = second = static_cast<int>(v);
                    if (mono.e[v] == 1) (first < 0 ? first : second) = static_cast<int>(v);
                }
                if (first == second) {
                    beta[static_cast<std::size_t>(first)][static_cast<std::size_t>(first)] = c;
                } else {
                    std::uint64_t half = fp.half(c);
                    beta[static_cast<std::size_t>(first)][static_cast<std::size_t>(second)] = half;
                    beta[static_cast<std::size_t>(second)][static_cast<std::size_t>(first)] = half;
                }
            }
            beta_row.push_back(std::move(beta));
        }
        out.beta.push_back(std::move(beta_row));
    }
    return out;
}

FormMatrix build_b_matrix(const HilbertBurchMatrix& m, const BlowupShape& shape, const PsiMap& psi) {
    MatrixCoefficients coeffs = extract_coefficients(m, shape);
    int n = shape.n;
    std::size_t k = shape.b_rows.size();
    FormMatrix b(psi.source, k, static_cast<std::size_t>(n) + 1);
    for (std::size_t u = 0; u < k; ++u) {
        for (int i = 0; i <= n; ++i) {
            Form entry(psi.source, 1);
            for (std::size_t l = 0; l < coeffs.delta[u].size(); ++l) {
                std::uint64_t c = coeffs.delta[u][l][static_cast<std::size_t>(i)];
                if (!c) continue;
                Monomial mono(psi.source.vars);
                mono.e[static_cast<std::size_t>(psi.num_x) + l] = 1;
                entry.add_term(mono, c);
            }
            for (std::size_t j = 0; j < coeffs.beta[u].size(); ++j) {
                for (int h = 0; h <= n; ++h) {
                    // beta^{uij}_h multiplies w_h w_i, so it lands on x_{hj}.
                    std::uint64_t c = coeffs.beta[u][j][static_cast<std::size_t>(i)][static_cast<std::size_t>(h)];
                    if (!c) continue;
                    Monomial mono(psi.source.vars);
                    mono.e[static_cast<std::size_t>(h * shape.num_f) + j] = 1;
                    entry.add_term(mono, c);
                }
            }
            b.set(u, static_cast<std::size_t>(i), std::move(entry));
        }
    }
    // Contract: psi(sum_i x_{i nu} B_{ui}) = 0, the expansion of det M_u.
    for (std::size_t u = 0; u < k; ++u) {
        for (int nu = 0; nu < shape.num_f; ++nu) {
            Form acc(psi.source, 2);
            for (int i = 0; i <= n; ++i) {
                Form xi = Form::variable(psi.source, static_cast<std::size_t>(i * shape.num_f + nu));
                acc = acc + xi * b.at(u, static_cast<std::size_t>(i));
            }
            if (!psi.apply(acc).is_zero())
                fail(Errc::invalid_input, "B contract violated: psi(sum x_{i nu} B_{ui}) != 0");
        }
    }
    return b;
}

std::vector<Form> build_h_forms(const PsiMap& psi, const BlowupShape& shape) {
    // Kernel of the linear map span{x, y} -> R_{d+1}, by exact rank.
    std::size_t vars = psi.source.vars;
    MonomialBasis target_basis(psi.target.vars, shape.mode_degree);
    std::vector<std::vector<std::uint32_t>> rows(target_basis.size(), std::vector<std::uint32_t>(vars, 0));
    for (std::size_t v = 0; v < vars; ++v)
        for (const auto& [mono, c] : psi.images[v].terms())
            rows[target_basis.index(mono)][v] = static_cast<std::uint32_t>(c);
    auto kernel = kernel_basis(psi.source.fp, rows, vars);
    if (shape.mode == BlowupMode::sigma) {
        std::size_t expected = static_cast<std::size_t>(std::max(0, shape.d - 2 * shape.k));
        if (kernel.size() != expected)
            fail(Errc::degenerate, "non-generic instance: linear kernel has dimension " +
                                       std::to_string(kernel.size()) + ", expected " + std::to_string(expected));
    }
    std::vector<Form> out;
    for (const auto& vec : kernel) {
        Form h(psi.source, 1);
        for (std::size_t v = 0; v < vars; ++v) {
            if (!vec[v]) continue;
            Monomial mono(psi.source.vars);
            mono.e[v] = 1;
            h.add_term(mono, vec[v]);
        }
        out.push_back(h.monic());
    }
    return out;
}

BlowupPresentation assemble_ideal(const HilbertBurchMatrix& m, BlowupMode mode) {
    BlowupShape shape = classify_blowup(m, mode);
    PsiMap psi = build_psi(m, shape);
    FormMatrix x = build_x_matrix(psi, shape);
    FormMatrix b = shape.b_rows.empty() ? FormMatrix(psi.source, 0, static_cast<std::size_t>(shape.n) + 1)
                                        : build_b_matrix(m, shape, psi);

    std::vector<Form> x_minors;
    if (shape.num_f >= 2)
        for (auto& minor : size_k_minors(x, 2)) x_minors.push_back(std::move(minor.value));

    std::vector<Form> bx_entries;
    if (!shape.b_rows.empty() && shape.num_f > 0) {
        for (std::size_t u = 0; u < b.rows(); ++u)
            for (std::size_t nu = 0; nu < x.cols(); ++nu) {
                Form acc(psi.source, 2);
                for (std::size_t i = 0; i < x.rows(); ++i) acc = acc + b.at(u, i) * x.at(i, nu);
                bx_entries.push_back(std::move(acc));
            }
    }

    std::vector<Form> b_minors;
    if (b.rows() >= static_cast<std::size_t>(shape.n) + 1)
        for (auto& minor : size_k_minors(b, static_cast<std::size_t>(shape.n) + 1))
            b_minors.push_back(std::move(minor.value));

    std::vector<Form> h_forms = build_h_forms(psi, shape);

    std::vector<Form> gens;
    for (const auto& f : x_minors) gens.push_back(f);
    for (const auto& f : bx_entries) gens.push_back(f);
    for (const auto& f : b_minors) gens.push_back(f);
    for (const auto& f : h_forms) gens.push_back(f);
    for (const auto& g : gens)
        if (!psi.apply(g).is_zero()) fail(Errc::invalid_input, "assembled generator is not psi-annihilated");

    long long ambient_dim = static_cast<long long>(psi.source.vars) - 1;

    // N from graded dimensions, cross-checked against the kernel count and,
    // for curves, the closed form N' = 3d - 3k + rho + 3.
    GradedIdeal source_ideal = variety_ideal(m);
    long long n_embed = source_ideal.piece_dimension(shape.mode_degree) - 1;
    if (n_embed != ambient_dim - static_cast<long long>(h_forms.size()))
        fail(Errc::degenerate, "embedding dimension mismatch between graded data and the kernel");
    if (m.n() == 3) {
        long long closed = 3LL * shape.d - 3LL * shape.k + static_cast<long long>(m.rho()) + 3;
        if (ambient_dim != closed)
            fail(Errc::degenerate, "N' closed form disagrees with the variable count");
    }

    GradedIdeal ideal(psi.source, gens);
    return BlowupPresentation{std::move(shape),     std::move(psi),     std::move(x),
                              std::move(b),         std::move(x_minors), std::move(bx_entries),
                              std::move(b_minors),  std::move(h_forms),  std::move(ideal),
                              n_embed,              ambient_dim};
}

BettiTable en_betti_table(int n, int sigma) {
    if (sigma <= n) fail(Errc::invalid_input, "Eagon-Northcott table needs sigma > n");
    BettiTable table;
    for (int i = 1; i <= sigma - n; ++i) {
        long long mult = binom(sigma, n + i) * binom(n + i - 1, i - 1);
        table.entries.push_back({i, n + i, mult});
    }
    table.normalize();
    return table;
}

namespace {

// Iterated spans of products of a basis of (I_V)_{d+1}: the t-th value is
// the dimension of the degree-t piece of Y's coordinate ring, computed
// entirely inside k[w_0..w_n].
class ImageHilbertSeries {
public:
    explicit ImageHilbertSeries(const BlowupPresentation& pres)
        : ring_(pres.psi.target), dd_(pres.shape.mode_degree) {
        MonomialBasis basis(ring_.vars, dd_);
        RowEchelon ech(ring_.fp, basis.size());
        for (const auto& img : pres.psi.images) {
            auto row = basis.coefficient_row(img, Monomial(ring_.vars));
            ech.add_row(row);
        }
        for (std::size_t i = 0; i < ech.rank(); ++i) gens_.push_back(ech.basis_row(i));
        prev_ = gens_;
        values_ = {1, static_cast<long long>(gens_.size())};
        cur_t_ = 1;
    }

    const std::vector<long long>& ensure(int t_max) {
        while (cur_t_ < t_max) step();
        return values_;
    }

private:
    void step() {
        const PrimeField& fp = ring_.fp;
        int t = cur_t_ + 1;
        MonomialBasis gen_basis(ring_.vars, dd_);
        MonomialBasis prev_basis(ring_.vars, dd_ * (t - 1));
        MonomialBasis cur_basis(ring_.vars, dd_ * t);
        RowEchelon ech(fp, cur_basis.size());
        for (const auto& grow : gens_) {
            std::vector<std::pair<std::size_t, std::uint64_t>> gterms;
            for (std::size_t c = 0; c < grow.size(); ++c)
                if (grow[c]) gterms.emplace_back(c, grow[c]);
            std::vector<std::vector<std::uint32_t>> gshift(gterms.size());
            for (std::size_t s = 0; s < gterms.size(); ++s) {
                const Monomial& gm = gen_basis.at(gterms[s].first);
                gshift[s].resize(prev_basis.size());
                for (std::size_t c = 0; c < prev_basis.size(); ++c)
                    gshift[s][c] = static_cast<std::uint32_t>(cur_basis.index(prev_basis.at(c) + gm));
            }
            for (const auto& prow : prev_) {
                std::vector<std::uint32_t> row(cur_basis.size(), 0);
                for (std::size_t s = 0; s < gterms.size(); ++s) {
                    std::uint64_t gc = gterms[s].second;
                    const auto& tbl = gshift[s];
                    for (std::size_t c = 0; c < prow.size(); ++c) {
                        if (!prow[c]) continue;
                        std::uint32_t idx = tbl[c];
                        row[idx] = static_cast<std::uint32_t>(fp.add(row[idx], fp.mul(gc, prow[c])));
                    }
                }
                ech.add_row(row);
            }
        }
        prev_.clear();
        for (std::size_t i = 0; i < ech.rank(); ++i) prev_.push_back(ech.basis_row(i));
        values_.push_back(static_cast<long long>(ech.rank()));
        cur_t_ = t;
    }

    Ring ring_;
    int dd_;
    std::vector<std::vector<std::uint32_t>> gens_, prev_;
    std::vector<long long> values_;
    int cur_t_ = 0;
};

} // namespace

std::vector<long long> image_hilbert(const BlowupPresentation& pres, int t_max) {
    ImageHilbertSeries series(pres);
    return series.ensure(t_max);
}

YReport analyze_Y(const BlowupPresentation& pres, const Caps& caps) {
    YReport rep;
    rep.n_embed = pres.n_embed;
    bool en_regime = pres.shape.mode == BlowupMode::sigma && pres.shape.num_f == 0;
    if (en_regime) {
        // All-linear sigma mode: P^sigma is small, use the x/y-ring module
        // directly and check it against the Eagon-Northcott table.
        int sigma = pres.shape.d + 1;
        int cap = caps.max_degree > 0 ? caps.max_degree : 10;
        PolyFit fit = hilbert_poly_fit(pres.generators, cap);
        rep.degree = fit.degree;
        rep.sectional_genus = fit.sectional_genus;
        rep.dim = fit.dim;
        for (int t = 0; t <= cap; ++t) rep.hilbert.push_back(pres.generators.hilbert(t));
        if (sigma > pres.shape.n) {
            BettiTable table = en_betti_table(pres.shape.n, sigma);
            bool ok = true;
            for (int t = 0; t <= cap; ++t)
                if (betti_to_hilbert(table, pres.psi.source.vars, t) != rep.hilbert[static_cast<std::size_t>(t)])
                    ok = false;
            rep.betti_consistent = ok;
            rep.en_table = table;
        }
        rep.low_degree_kernel_match = true;
        return rep;
    }

    int t_cap = caps.max_degree > 0 ? caps.max_degree : 10;
    ImageHilbertSeries series(pres);
    PolyFit fit;
    bool fitted = false;
    for (int t_max = std::min(5, t_cap); t_max <= t_cap && !fitted; ++t_max) {
        const auto& h = series.ensure(t_max);
        try {
            fit = fit_from_values(h, t_max);
            fitted = true;
        } catch (const Error& e) {
            if (e.code() != Errc::cap_exceeded || t_max == t_cap) throw;
        }
    }
    rep.hilbert = series.ensure(0);
    rep.degree = fit.degree;
    rep.sectional_genus = fit.sectional_genus;
    rep.dim = fit.dim;

    // Low-degree completeness: the assembled generators span (ker psi)_t.
    rep.low_degree_kernel_match = true;
    for (int t = 1; t <= 2; ++t) {
        long long st = binom(t + static_cast<long long>(pres.psi.source.vars) - 1,
                             static_cast<long long>(pres.psi.source.vars) - 1);
        long long ker_dim = st - rep.hilbert[static_cast<std::size_t>(t)];
        if (pres.generators.piece_dimension(t) != ker_dim) rep.low_degree_kernel_match = false;
    }
    return rep;
}

} // namespace detblow
