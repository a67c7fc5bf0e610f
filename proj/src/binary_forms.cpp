#include "detblow/binary_forms.hpp"

#include <algorithm>

#include "detblow/rng.hpp"

namespace detblow {

UniPoly uni_trim(UniPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int uni_degree(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

UniPoly uni_mul(const PrimeField& fp, const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
    }
    return uni_trim(std::move(r));
}

std::pair<UniPoly, UniPoly> uni_divmod(const PrimeField& fp, const UniPoly& a, const UniPoly& b) {
    if (b.empty()) fail(Errc::invalid_input, "division by zero polynomial");
    UniPoly rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
    std::uint64_t lead_inv = fp.inv(b.back());
    while (rem.size() >= b.size() && !rem.empty()) {
        std::uint64_t c = fp.mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - b.size();
        if (c) {
            quot[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i)
                rem[shift + i] = fp.sub(rem[shift + i], fp.mul(c, b[i]));
        }
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < b.size()) break;
    }
    return {uni_trim(std::move(quot)), uni_trim(std::move(rem))};
}

UniPoly uni_gcd(const PrimeField& fp, UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = uni_divmod(fp, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = fp.inv(a.back());
        for (auto& c : a) c = fp.mul(c, inv);
    }
    return a;
}

UniPoly uni_powmod(const PrimeField& fp, UniPoly base, std::uint64_t e, const UniPoly& mod) {
    UniPoly r{1};
    base = uni_divmod(fp, std::move(base), mod).second;
    while (e) {
        if (e & 1) r = uni_divmod(fp, uni_mul(fp, r, base), mod).second;
        base = uni_divmod(fp, uni_mul(fp, base, base), mod).second;
        e >>= 1;
    }
    return r;
}

namespace {

// Splits a squarefree product of linear factors into its roots.
void split_roots(const PrimeField& fp, const UniPoly& g, SplitMix64& rng, std::vector<std::uint64_t>& out) {
    int d = uni_degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(fp.mul(fp.neg(g[0]), fp.inv(g[1])));
        return;
    }
    for (;;) {
        std::uint64_t c = rng.below(fp.p());
        UniPoly shifted{c, 1};
        UniPoly h = uni_powmod(fp, shifted, (fp.p() - 1) / 2, g);
        if (h.empty())
            h = UniPoly{fp.neg(1)};
        else
            h[0] = fp.sub(h[0], 1);
        UniPoly f1 = uni_gcd(fp, g, h);
        int d1 = uni_degree(f1);
        if (d1 <= 0 || d1 >= d) continue;
        auto [q, r] = uni_divmod(fp, g, f1);
        (void)r;
        std::uint64_t inv = q.empty() ? 1 : fp.inv(q.back());
        for (auto& cc : q) cc = fp.mul(cc, inv);
        split_roots(fp, f1, rng, out);
        split_roots(fp, q, rng, out);
        return;
    }
}

void require_binary(const Form& f) {
    if (f.ring().vars != 2) fail(Errc::invalid_input, "binary form expected");
}

// Strips shared variable powers: f = s^a t^b u with u nonzero at both ends.
struct Stripped {
    int s_pow = 0, t_pow = 0;
    UniPoly u; // u as polynomial in x, coefficient of s^i t^(d-i) at x^i
};

Stripped strip(const Form& f) {
    Stripped out;
    int min_s = 1 << 30, min_t = 1 << 30;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        min_s = std::min(min_s, static_cast<int>(m.e[0]));
        min_t = std::min(min_t, static_cast<int>(m.e[1]));
    }
    out.s_pow = min_s;
    out.t_pow = min_t;
    int d = f.degree() - min_s - min_t;
    out.u.assign(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [m, c] : f.terms()) out.u[m.e[0] - min_s] = c;
    return out;
}

Form rehomogenize(const Ring& ring, const UniPoly& u, int s_pow, int t_pow) {
    int d = uni_degree(u);
    Form f(ring, d + s_pow + t_pow);
    for (int i = 0; i <= d; ++i) {
        if (!u[i]) continue;
        Monomial m(2);
        m.e[0] = static_cast<std::uint16_t>(i + s_pow);
        m.e[1] = static_cast<std::uint16_t>(d - i + t_pow);
        f.add_term(m, u[i]);
    }
    return f;
}

} // namespace

UniRoots uni_roots(const PrimeField& fp, UniPoly f, std::uint64_t seed) {
    UniRoots out;
    f = uni_trim(std::move(f));
    if (f.empty()) fail(Errc::invalid_input, "root finding on zero polynomial");
    // Distinct roots from gcd(f, x^p - x).
    UniPoly xp = uni_powmod(fp, UniPoly{0, 1}, fp.p(), f);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = fp.sub(xp[1], 1);
    UniPoly g = uni_gcd(fp, f, uni_trim(std::move(xp)));
    std::vector<std::uint64_t> roots;
    SplitMix64 rng(seed ^ 0x8f1f672f3a0d9d2bull);
    split_roots(fp, g, rng, roots);
    std::sort(roots.begin(), roots.end());
    int accounted = 0;
    for (auto r : roots) {
        UniPoly lin{fp.neg(r), 1};
        int mult = 0;
        UniPoly cur = f;
        for (;;) {
            auto [q, rem] = uni_divmod(fp, cur, lin);
            if (!rem.empty()) break;
            ++mult;
            cur = std::move(q);
        }
        out.roots.emplace_back(r, mult);
        accounted += mult;
    }
    out.irrational_degree = uni_degree(f) - accounted;
    return out;
}

Form binary_gcd(const std::vector<Form>& forms) {
    if (forms.empty()) fail(Errc::invalid_input, "gcd of empty list");
    const Ring& ring = forms.front().ring();
    int min_s = -1, min_t = -1;
    UniPoly g;
    bool any = false;
    for (const auto& f : forms) {
        require_binary(f);
        if (f.ring() != ring) fail(Errc::invalid_input, "gcd over mixed rings");
        if (f.is_zero()) continue;
        Stripped st = strip(f);
        if (!any) {
            min_s = st.s_pow;
            min_t = st.t_pow;
            g = st.u;
            any = true;
        } else {
            min_s = std::min(min_s, st.s_pow);
            min_t = std::min(min_t, st.t_pow);
            g = uni_gcd(ring.fp, std::move(g), st.u);
        }
    }
    if (!any) fail(Errc::degenerate, "all inputs zero: line contained in variety");
    if (!g.empty()) {
        std::uint64_t inv = ring.fp.inv(g.back());
        for (auto& c : g) c = ring.fp.mul(c, inv);
    }
    return rehomogenize(ring, g, min_s, min_t).monic();
}

bool binary_divides(const Form& g, const Form& f) {
    require_binary(g);
    require_binary(f);
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    Stripped sg = strip(g), sf = strip(f);
    if (sg.s_pow > sf.s_pow || sg.t_pow > sf.t_pow) return false;
    auto [q, r] = uni_divmod(f.ring().fp, sf.u, sg.u);
    (void)q;
    return r.empty();
}

BinaryRoots binary_roots(const Form& f, std::uint64_t seed) {
    require_binary(f);
    if (f.is_zero()) fail(Errc::invalid_input, "roots of the zero form");
    BinaryRoots out;
    Stripped st = strip(f);
    if (st.s_pow > 0) out.points.push_back({{0, 1}, st.s_pow});
    if (st.t_pow > 0) out.points.push_back({{1, 0}, st.t_pow});
    if (uni_degree(st.u) > 0) {
        UniRoots ur = uni_roots(f.ring().fp, st.u, seed);
        for (const auto& [r, mult] : ur.roots) out.points.push_back({{r, 1}, mult});
        out.irrational_degree = ur.irrational_degree;
    }
    return out;
}

UniPoly dehomogenize(const Form& f) {
    require_binary(f);
    if (f.is_zero()) return {};
    return strip(f).u;
}

} // namespace detblow
