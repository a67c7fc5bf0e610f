#include "detblow/secants.hpp"

#include <algorithm>

namespace detblow {

SecantSystem build_system(const HilbertBurchMatrix& m) {
    if (!m.all_linear()) fail(Errc::invalid_input, "projective generation needs an all-linear matrix");
    int n = m.n();
    int sigma = static_cast<int>(m.rho());
    const PrimeField& fp = m.ring().fp;
    Ring zring{static_cast<std::uint32_t>(sigma), fp};
    Ring yring{static_cast<std::uint32_t>(sigma + 1), fp};
    FormMatrix z(zring, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(sigma) + 1);
    FormMatrix nmat(yring, static_cast<std::size_t>(sigma), static_cast<std::size_t>(n) + 1);
    std::vector<Form> zacc(static_cast<std::size_t>(n + 1) * (sigma + 1), Form::zero(zring, 1));
    std::vector<Form> nacc(static_cast<std::size_t>(sigma) * (n + 1), Form::zero(yring, 1));
    for (int i = 0; i < sigma; ++i) {
        for (int j = 0; j <= sigma; ++j) {
            const Form& entry = m.entries().at(i, j);
            for (const auto& [mono, coeff] : entry.terms()) {
                int k = -1;
                for (std::size_t v = 0; v < mono.e.size(); ++v)
                    if (mono.e[v]) k = static_cast<int>(v);
                Monomial zi(zring.vars);
                zi.e[static_cast<std::size_t>(i)] = 1;
                zacc[static_cast<std::size_t>(k) * (sigma + 1) + j].add_term(zi, coeff);
                Monomial yj(yring.vars);
                yj.e[static_cast<std::size_t>(j)] = 1;
                nacc[static_cast<std::size_t>(i) * (n + 1) + k].add_term(yj, coeff);
            }
        }
    }
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= sigma; ++j) z.set(k, j, zacc[static_cast<std::size_t>(k) * (sigma + 1) + j]);
    for (int i = 0; i < sigma; ++i)
        for (int k = 0; k <= n; ++k) nmat.set(i, k, nacc[static_cast<std::size_t>(i) * (n + 1) + k]);
    return SecantSystem{m, std::move(z), std::move(nmat), n, sigma};
}

namespace {

GradedIdeal rank_locus_ideal(const FormMatrix& m, std::size_t minor_size) {
    std::vector<Form> gens;
    for (auto& minor : size_k_minors(m, minor_size))
        if (!minor.value.is_zero()) gens.push_back(std::move(minor.value));
    if (gens.empty()) fail(Errc::degenerate, "all rank-locus minors vanish identically");
    return GradedIdeal(m.ring(), std::move(gens));
}

// Fill scan with a column-width budget: 1 = filled (empty locus), 0 = still
// open at the cap, -1 = stopped by the budget.
int budgeted_fill(const GradedIdeal& ideal, int cap, long long column_budget, int* fill_degree) {
    long long m = static_cast<long long>(ideal.ring().vars) - 1;
    int start = ideal.max_generator_degree();
    for (int t = start; t <= cap; ++t) {
        if (binom(t + m, m) > column_budget) return -1;
        if (ideal.hilbert(t) == 0) {
            *fill_degree = t;
            return 1;
        }
    }
    return 0;
}

RankLocusReport locus_report(const FormMatrix& matrix, int n, const Caps& caps) {
    std::size_t minor_size = static_cast<std::size_t>(n);
    GradedIdeal ideal = rank_locus_ideal(matrix, minor_size);
    RankLocusReport rep;
    rep.target_rank = n - 1;
    rep.ambient_vars = matrix.ring().vars;
    rep.num_minors = ideal.generators().size();
    rep.minor_degree = ideal.max_generator_degree();
    long long height_bound = static_cast<long long>(matrix.rows() - minor_size + 1) *
                             static_cast<long long>(matrix.cols() - minor_size + 1);
    rep.nonempty_by_height_bound = height_bound <= static_cast<long long>(rep.ambient_vars) - 1;
    int cap = caps.fit_cap(rep.minor_degree);
    // One ascending pass: H hitting 0 certifies emptiness, otherwise the
    // first stabilized fit gives dimension and degree. A locus the height
    // bound already forces to be nonempty stops at the column budget and
    // reports its dimension as uncomputed instead of overrunning the cap.
    int min_start = rep.minor_degree + 1;
    std::vector<long long> values;
    bool budget_stop = false;
    for (int t = 0; t <= cap; ++t) {
        if (binom(t + static_cast<long long>(rep.ambient_vars) - 1,
                  static_cast<long long>(rep.ambient_vars) - 1) > caps.column_budget) {
            budget_stop = true;
            break;
        }
        long long h = ideal.hilbert(t);
        if (h == 0) {
            rep.empty = true;
            rep.fill_degree = t;
            rep.certificate = LocusCertificate::fill;
            return rep;
        }
        values.push_back(h);
        if (t < min_start + 2) continue;
        try {
            PolyFit fit = fit_from_values(values, cap, min_start);
            rep.empty = false;
            rep.dim_known = true;
            rep.dim = fit.dim;
            rep.degree = fit.degree;
            rep.codim = static_cast<int>(rep.ambient_vars) - 1 - fit.dim;
            rep.certificate = LocusCertificate::fit;
            return rep;
        } catch (const Error& e) {
            if (e.code() != Errc::cap_exceeded) throw;
        }
    }
    if (rep.nonempty_by_height_bound) {
        rep.empty = false;
        rep.dim_known = false;
        rep.certificate = LocusCertificate::height_bound;
        return rep;
    }
    if (budget_stop) {
        // Slice tier: a generic hyperplane slice of the matrix keeps entries
        // linear in one fewer variable; its fill certifies that the locus
        // has no positive-dimensional component. Two independent slices.
        const PrimeField& fp = matrix.ring().fp;
        for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
            Ring sub{matrix.ring().vars - 1, fp};
            SplitMix64 rng(0xd1ce5bull + attempt * 0x9E3779B9ull);
            std::vector<Form> images;
            for (std::uint32_t k = 0; k < matrix.ring().vars; ++k)
                images.push_back(random_form(sub, 1, rng));
            FormMatrix sliced(sub, matrix.rows(), matrix.cols());
            for (std::size_t i = 0; i < matrix.rows(); ++i)
                for (std::size_t j = 0; j < matrix.cols(); ++j)
                    sliced.set(i, j, matrix.at(i, j).substitute_linear(images));
            GradedIdeal sliced_ideal = rank_locus_ideal(sliced, minor_size);
            int fill = 0;
            if (budgeted_fill(sliced_ideal, cap, caps.column_budget, &fill) == 1) {
                rep.empty = true;
                rep.fill_degree = fill;
                rep.certificate = LocusCertificate::slice;
                return rep;
            }
        }
    }
    fail(Errc::cap_exceeded, "rank locus undecided below cap " + std::to_string(cap));
}

} // namespace

const char* certificate_name(LocusCertificate c) {
    switch (c) {
        case LocusCertificate::fill: return "fill";
        case LocusCertificate::fit: return "fit";
        case LocusCertificate::height_bound: return "height_bound";
        case LocusCertificate::slice: return "slice";
    }
    return "?";
}

GradedIdeal line_locus_ideal(const SecantSystem& s) {
    return rank_locus_ideal(s.z, static_cast<std::size_t>(s.n));
}

GradedIdeal secant_locus_ideal(const SecantSystem& s) {
    return rank_locus_ideal(s.nmat, static_cast<std::size_t>(s.n));
}

RankLocusReport line_locus(const SecantSystem& s, const Caps& caps) {
    return locus_report(s.z, s.n, caps);
}

RankLocusReport secant_locus(const SecantSystem& s, const Caps& caps) {
    return locus_report(s.nmat, s.n, caps);
}

int generic_rank(const FormMatrix& m, int trials, std::uint64_t seed) {
    if (trials < 1) fail(Errc::invalid_input, "generic_rank needs trials >= 1");
    const PrimeField& fp = m.ring().fp;
    SplitMix64 rng(seed);
    std::size_t best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::uint64_t> point;
        for (std::uint32_t v = 0; v < m.ring().vars; ++v) point.push_back(rng.below(fp.p()));
        auto values = m.eval(point);
        std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                rows[i][j] = static_cast<std::uint32_t>(values[i * m.cols() + j]);
        best = std::max(best, matrix_rank(fp, rows, m.cols()));
    }
    return static_cast<int>(best);
}

Line secant_line_from_parameter(const SecantSystem& s, const std::vector<std::uint64_t>& y) {
    if (y.size() != s.nmat.ring().vars) fail(Errc::invalid_input, "parameter arity must be sigma + 1");
    const PrimeField& fp = s.nmat.ring().fp;
    auto values = s.nmat.eval(y);
    std::vector<std::vector<std::uint32_t>> rows(s.nmat.rows(), std::vector<std::uint32_t>(s.nmat.cols()));
    for (std::size_t i = 0; i < s.nmat.rows(); ++i)
        for (std::size_t k = 0; k < s.nmat.cols(); ++k)
            rows[i][k] = static_cast<std::uint32_t>(values[i * s.nmat.cols() + k]);
    std::size_t rank = matrix_rank(fp, rows, s.nmat.cols());
    if (rank != static_cast<std::size_t>(s.n) - 1)
        fail(Errc::invalid_input, "rank N(y) = " + std::to_string(rank) + ", expected " + std::to_string(s.n - 1));
    auto kernel = kernel_basis(fp, rows, s.nmat.cols());
    if (kernel.size() != 2) fail(Errc::degenerate, "unexpected kernel dimension");
    return make_line(fp, kernel[0], kernel[1]);
}

namespace {

struct QuotientData {
    std::vector<std::vector<std::vector<std::uint64_t>>> mult; // per variable: D x D operator
    std::size_t dim = 0;
};

// Multiplication operators on A_t = S_t / (I)_t at the plateau degree, with
// the basis of cosets given by the free (non-pivot) monomials.
std::optional<QuotientData> quotient_operators(const GradedIdeal& ideal, int cap) {
    int plateau = -1;
    for (int t = std::max(1, ideal.max_generator_degree()); t + 2 <= cap; ++t) {
        long long h0 = ideal.hilbert(t), h1 = ideal.hilbert(t + 1), h2 = ideal.hilbert(t + 2);
        if (h0 > 0 && h0 == h1 && h1 == h2) {
            plateau = t;
            break;
        }
    }
    if (plateau < 0) return std::nullopt;
    const Ring& ring = ideal.ring();
    const PrimeField& fp = ring.fp;
    int t = plateau;
    auto ech_t = ideal.piece_echelon(t);
    auto ech_t1 = ideal.piece_echelon(t + 1);
    MonomialBasis basis_t(ring.vars, t), basis_t1(ring.vars, t + 1);
    auto free_t = ech_t->free_columns();
    auto free_t1 = ech_t1->free_columns();
    std::size_t D = free_t.size();
    if (D == 0 || free_t1.size() != D) return std::nullopt;
    std::vector<std::size_t> free_index_t1(basis_t1.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < free_t1.size(); ++i) free_index_t1[free_t1[i]] = i;

    QuotientData out;
    out.dim = D;
    out.mult.assign(ring.vars, std::vector<std::vector<std::uint64_t>>(D, std::vector<std::uint64_t>(D, 0)));
    for (std::size_t b = 0; b < D; ++b) {
        const Monomial& m = basis_t.at(free_t[b]);
        for (std::uint32_t v = 0; v < ring.vars; ++v) {
            Monomial shifted = m;
            shifted.e[v] = static_cast<std::uint16_t>(shifted.e[v] + 1);
            std::vector<std::uint32_t> row(basis_t1.size(), 0);
            row[basis_t1.index(shifted)] = 1;
            ech_t1->reduce(row);
            for (std::size_t col = 0; col < row.size(); ++col) {
                if (!row[col]) continue;
                std::size_t fi = free_index_t1[col];
                if (fi == static_cast<std::size_t>(-1)) return std::nullopt; // reduction left a pivot column
                out.mult[v][fi][b] = row[col];
            }
            (void)fp;
        }
    }
    return out;
}

std::vector<std::uint64_t> mat_vec(const PrimeField& fp, const std::vector<std::vector<std::uint64_t>>& a,
                                   const std::vector<std::uint64_t>& x) {
    std::vector<std::uint64_t> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] && x[j]) acc = fp.add(acc, fp.mul(a[i][j], x[j]));
        r[i] = acc;
    }
    return r;
}

std::vector<std::vector<std::uint64_t>> mat_inverse_times(const PrimeField& fp,
                                                          std::vector<std::vector<std::uint64_t>> v,
                                                          const std::vector<std::vector<std::uint64_t>>& u) {
    // Returns V^{-1} U by solving V X = U column-wise via one elimination.
    std::size_t n = v.size();
    std::vector<std::vector<std::uint64_t>> x(n, std::vector<std::uint64_t>(n, 0));
    std::vector<std::vector<std::uint64_t>> rhs(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs[i][j] = u[i][j];
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && v[piv][col] == 0) ++piv;
        if (piv == n) fail(Errc::degenerate, "singular reference operator");
        std::swap(v[piv], v[col]);
        std::swap(rhs[piv], rhs[col]);
        std::uint64_t inv = fp.inv(v[col][col]);
        for (std::size_t k = 0; k < n; ++k) {
            v[col][k] = fp.mul(v[col][k], inv);
            rhs[col][k] = fp.mul(rhs[col][k], inv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || v[r][col] == 0) continue;
            std::uint64_t f = v[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                v[r][k] = fp.sub(v[r][k], fp.mul(f, v[col][k]));
                rhs[r][k] = fp.sub(rhs[r][k], fp.mul(f, rhs[col][k]));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i];
    return x;
}

UniPoly charpoly(const PrimeField& fp, const std::vector<std::vector<std::uint64_t>>& a) {
    // Faddeev-LeVerrier; p exceeds the matrix size so the divisions are fine.
    std::size_t n = a.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    std::vector<std::uint64_t> coeffs(n + 1, 0);
    coeffs[n] = 1;
    std::vector<std::vector<std::uint64_t>> am = m;
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    std::uint64_t c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // am = a * m
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (a[i][l] && m[l][j]) acc = fp.add(acc, fp.mul(a[i][l], m[l][j]));
                am[i][j] = acc;
            }
        std::uint64_t tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr = fp.add(tr, am[i][i]);
        c = fp.mul(fp.neg(tr), fp.inv(k % fp.p()));
        coeffs[n - k] = c;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m[i][i] = fp.add(m[i][i], c);
    }
    return coeffs;
}

} // namespace

std::vector<std::vector<std::uint64_t>> rational_points(const GradedIdeal& ideal, int cap,
                                                        std::uint64_t seed) {
    const PrimeField& fp = ideal.ring().fp;
    std::size_t vars = ideal.ring().vars;
    auto ops = quotient_operators(ideal, cap);
    if (!ops) fail(Errc::cap_exceeded, "quotient dimension did not stabilize below cap");
    std::size_t D = ops->dim;
    SplitMix64 rng(seed ^ 0x517cc1b727220a95ull);
    // Reference form: try plain coordinates first, then random combinations.
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::uint64_t> ref_coeffs(vars, 0);
        if (attempt < static_cast<int>(vars))
            ref_coeffs[static_cast<std::size_t>(attempt)] = 1;
        else
            for (auto& c : ref_coeffs) c = rng.below(fp.p());
        std::vector<std::vector<std::uint64_t>> vmat(D, std::vector<std::uint64_t>(D, 0));
        for (std::size_t v = 0; v < vars; ++v) {
            if (!ref_coeffs[v]) continue;
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j)
                    vmat[i][j] = fp.add(vmat[i][j], fp.mul(ref_coeffs[v], ops->mult[v][i][j]));
        }
        std::vector<std::vector<std::vector<std::uint64_t>>> t_ops;
        try {
            for (std::size_t v = 0; v < vars; ++v) t_ops.push_back(mat_inverse_times(fp, vmat, ops->mult[v]));
        } catch (const Error&) {
            continue; // reference vanishes somewhere on the scheme; try another
        }
        // Separating linear combination.
        std::vector<std::uint64_t> sep(vars);
        for (auto& c : sep) c = rng.below(fp.p());
        std::vector<std::vector<std::uint64_t>> t(D, std::vector<std::uint64_t>(D, 0));
        for (std::size_t v = 0; v < vars; ++v)
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j)
                    t[i][j] = fp.add(t[i][j], fp.mul(sep[v], t_ops[v][i][j]));
        UniPoly cp = charpoly(fp, t);
        UniRoots roots = uni_roots(fp, cp, seed + 17);
        std::vector<std::vector<std::uint64_t>> points;
        for (const auto& [root, mult] : roots.roots) {
            (void)mult;
            // Eigenvector of T for this eigenvalue.
            std::vector<std::vector<std::uint32_t>> shifted(D, std::vector<std::uint32_t>(D));
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j)
                    shifted[i][j] = static_cast<std::uint32_t>(
                        fp.sub(t[i][j], (i == j) ? root : 0));
            auto kernel = kernel_basis(fp, shifted, D);
            if (kernel.size() != 1) continue; // non-simple eigenvalue; skip
            const auto& e = kernel.front();
            std::size_t pivot = 0;
            while (pivot < D && e[pivot] == 0) ++pivot;
            if (pivot == D) continue;
            std::uint64_t inv = fp.inv(e[pivot]);
            std::vector<std::uint64_t> coords(vars, 0);
            bool ok = true;
            for (std::size_t v = 0; v < vars && ok; ++v) {
                auto w = mat_vec(fp, t_ops[v], e);
                std::uint64_t lambda = fp.mul(w[pivot], inv);
                for (std::size_t i = 0; i < D; ++i)
                    if (w[i] != fp.mul(lambda, e[i])) {
                        ok = false;
                        break;
                    }
                coords[v] = lambda;
            }
            if (!ok) continue;
            // Normalize: first nonzero coordinate to 1.
            std::uint64_t lead = 0;
            for (auto c : coords)
                if (c) {
                    lead = c;
                    break;
                }
            if (!lead) continue;
            std::uint64_t linv = fp.inv(lead);
            for (auto& c : coords) c = fp.mul(c, linv);
            points.push_back(std::move(coords));
        }
        if (!points.empty()) {
            std::sort(points.begin(), points.end());
            points.erase(std::unique(points.begin(), points.end()), points.end());
            return points;
        }
    }
    return {};
}

std::optional<SecantWitness> find_secant_witness(const SecantSystem& s, std::uint64_t seed,
                                                 const Caps& caps, int max_retries) {
    RankLocusReport rep = secant_locus(s, caps);
    if (rep.empty) return std::nullopt;
    const PrimeField& fp = s.nmat.ring().fp;
    int excess = rep.dim;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        SplitMix64 rng(seed + 0x9E3779B9ull * static_cast<std::uint64_t>(attempt));
        // Slice Gamma to dimension zero by substituting the y-variables with
        // a random linear parametrization of a codimension-`excess` subspace.
        std::size_t full_vars = s.nmat.ring().vars;
        std::size_t sub_vars = full_vars - static_cast<std::size_t>(excess);
        Ring sub{static_cast<std::uint32_t>(sub_vars), fp};
        std::vector<Form> images;
        for (std::size_t k = 0; k < full_vars; ++k) images.push_back(random_form(sub, 1, rng));
        FormMatrix sliced(sub, s.nmat.rows(), s.nmat.cols());
        bool same = excess == 0;
        for (std::size_t i = 0; i < s.nmat.rows(); ++i)
            for (std::size_t k = 0; k < s.nmat.cols(); ++k)
                sliced.set(i, k, same ? s.nmat.at(i, k) : s.nmat.at(i, k).substitute_linear(images));
        GradedIdeal ideal = rank_locus_ideal(sliced, static_cast<std::size_t>(s.n));
        int cap = caps.fit_cap(ideal.max_generator_degree()) + 2;
        std::vector<std::vector<std::uint64_t>> points;
        try {
            points = rational_points(ideal, cap, seed + 31 * static_cast<std::uint64_t>(attempt));
        } catch (const Error&) {
            continue;
        }
        for (const auto& pt : points) {
            std::vector<std::uint64_t> y(full_vars, 0);
            if (same) {
                y = pt;
            } else {
                for (std::size_t k = 0; k < full_vars; ++k) y[k] = images[k].eval(pt);
            }
            try {
                Line line = secant_line_from_parameter(s, y);
                auto len = intersection_length(s.source, line);
                if (len && *len == s.sigma) return SecantWitness{y, line, *len};
            } catch (const Error&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

} // namespace detblow
