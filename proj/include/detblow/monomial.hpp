#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detblow {

// Exponent vector of a monomial; entry k is the exponent of the k-th ring
// variable. Total degree is the sum of the entries.
struct Monomial {
    std::vector<std::uint16_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t vars) : e(vars, 0) {}

    std::size_t vars() const { return e.size(); }
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    Monomial operator+(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = static_cast<std::uint16_t>(r.e[k] + o.e[k]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lexicographic order with variable 0 largest; higher degree wins.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
    return false;
}

// Map comparator making iteration run from the leading term downwards.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// All monomials of the given total degree, in descending graded-lex order
// (matching the canonical printing order).
std::vector<Monomial> monomials_of_degree(std::size_t vars, int degree);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

} // namespace detblow
