#include "detblow/form.hpp"

#include "detblow/rng.hpp"

namespace detblow {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b) fail(Errc::invalid_input, "forms live over different rings");
}

} // namespace

Form Form::constant(const Ring& ring, std::uint64_t c) {
    Form f(ring, 0);
    f.add_term(Monomial(ring.vars), c % ring.fp.p());
    return f;
}

Form Form::variable(const Ring& ring, std::size_t index) {
    if (index >= ring.vars) fail(Errc::invalid_input, "variable index out of range");
    Form f(ring, 1);
    Monomial m(ring.vars);
    m.e[index] = 1;
    f.add_term(m, 1);
    return f;
}

Form Form::from_terms(const Ring& ring, int degree,
                      const std::vector<std::pair<Monomial, std::uint64_t>>& terms) {
    Form f(ring, degree);
    for (const auto& [m, c] : terms) {
        if (m.vars() != ring.vars) fail(Errc::invalid_input, "monomial arity mismatch");
        if (m.degree() != degree) fail(Errc::invalid_input, "inhomogeneous term");
        f.add_term(m, c % ring.fp.p());
    }
    return f;
}

void Form::add_term(const Monomial& m, std::uint64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = ring_.fp.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

const Monomial& Form::leading_monomial() const {
    if (terms_.empty()) fail(Errc::invalid_input, "zero form has no leading term");
    return terms_.begin()->first;
}

std::uint64_t Form::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

Form Form::operator+(const Form& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) fail(Errc::invalid_input, "adding forms of different degrees");
    Form r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Form Form::operator-(const Form& o) const { return *this + o.negated(); }

Form Form::negated() const {
    Form r(ring_, degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_.fp.neg(c));
    return r;
}

Form Form::scaled(std::uint64_t c) const {
    c %= ring_.fp.p();
    Form r(ring_, degree_);
    if (c == 0) return r;
    for (const auto& [m, cm] : terms_) {
        std::uint64_t v = ring_.fp.mul(cm, c);
        if (v) r.terms_.emplace(m, v);
    }
    return r;
}

Form Form::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.fp.inv(leading_coefficient()));
}

Form Form::operator*(const Form& o) const {
    require_same_ring(ring_, o.ring_);
    Form r(ring_, degree_ + o.degree_);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ring_.fp.mul(ca, cb));
    return r;
}

Form Form::pow(unsigned e) const {
    Form r = Form::constant(ring_, 1);
    Form base(*this);
    while (e) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
        e >>= 1;
    }
    return r;
}

std::uint64_t Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t Form::eval(const std::vector<std::uint64_t>& point) const {
    if (point.size() != ring_.vars) fail(Errc::invalid_input, "evaluation point arity mismatch");
    const auto& fp = ring_.fp;
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t v = c;
        for (std::size_t k = 0; k < m.e.size(); ++k)
            if (m.e[k]) v = fp.mul(v, fp.pow(point[k] % fp.p(), m.e[k]));
        acc = fp.add(acc, v);
    }
    return acc;
}

Form Form::substitute_linear(const std::vector<Form>& images) const {
    if (images.size() != ring_.vars) fail(Errc::invalid_input, "one image per variable required");
    const Ring& target = images.empty() ? ring_ : images.front().ring();
    for (const auto& img : images) {
        if (img.ring() != target) fail(Errc::invalid_input, "images over mixed rings");
        if (img.degree() != 1) fail(Errc::invalid_input, "images must have degree 1");
    }
    // Memoize per-variable powers; exponents stay small.
    std::vector<std::vector<Form>> powers(images.size());
    auto power_of = [&](std::size_t k, unsigned e) -> const Form& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(Form::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
        return cache[e];
    };
    Form r(target, degree_);
    for (const auto& [m, c] : terms_) {
        Form t = Form::constant(target, c);
        for (std::size_t k = 0; k < m.e.size(); ++k)
            if (m.e[k]) t = t * power_of(k, m.e[k]);
        if (!t.is_zero()) {
            // t is homogeneous of degree m.degree() == degree_.
            for (const auto& [mm, cc] : t.terms()) r.add_term(mm, cc);
        }
    }
    return r;
}

std::string Form::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        std::string ms = monomial_to_string(m, names);
        if (ms != "1") {
            s += "*";
            s += ms;
        }
    }
    return s;
}

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count, int first) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t k = 0; k < count; ++k) names.push_back(prefix + std::to_string(first + static_cast<int>(k)));
    return names;
}

Form random_form(const Ring& ring, int degree, SplitMix64& rng) {
    Form f(ring, degree);
    for (const auto& m : monomials_of_degree(ring.vars, degree)) f.add_term(m, rng.below(ring.fp.p()));
    return f;
}

} // namespace detblow
