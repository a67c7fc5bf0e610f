#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "detblow/field.hpp"
#include "detblow/monomial.hpp"

namespace detblow {

// Ambient polynomial ring data: number of variables and the coefficient field.
struct Ring {
    std::uint32_t vars = 0;
    PrimeField fp;

    bool operator==(const Ring& o) const { return vars == o.vars && fp == o.fp; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

// Sparse homogeneous form. Every stored monomial has total degree exactly
// degree(); no zero coefficients are kept. The zero form has an empty term
// map and a nominal degree. Values are immutable after construction.
class Form {
public:
    using TermMap = std::map<Monomial, std::uint64_t, GrlexDesc>;

    Form(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {}

    static Form zero(const Ring& ring, int degree) { return Form(ring, degree); }
    static Form constant(const Ring& ring, std::uint64_t c);
    static Form variable(const Ring& ring, std::size_t index);
    static Form from_terms(const Ring& ring, int degree,
                           const std::vector<std::pair<Monomial, std::uint64_t>>& terms);

    const Ring& ring() const { return ring_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading coefficient/monomial under descending graded-lex.
    const Monomial& leading_monomial() const;
    std::uint64_t leading_coefficient() const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Form& o) const;
    Form negated() const;
    Form scaled(std::uint64_t c) const;
    Form monic() const;
    Form pow(unsigned e) const;

    bool operator==(const Form& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    std::uint64_t coefficient(const Monomial& m) const;
    std::uint64_t eval(const std::vector<std::uint64_t>& point) const;

    // Replaces variable k by images[k]; all images must be forms of degree 1
    // over one common target ring. Degree is preserved (or the result is 0).
    Form substitute_linear(const std::vector<Form>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

    // Internal: accumulate c * m into the map, dropping cancellations.
    void add_term(const Monomial& m, std::uint64_t c);

private:
    Ring ring_;
    int degree_;
    TermMap terms_;
};

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count, int first = 0);

Form random_form(const Ring& ring, int degree, class SplitMix64& rng);

} // namespace detblow
