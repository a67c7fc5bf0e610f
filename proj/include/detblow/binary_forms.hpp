#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "detblow/form.hpp"

namespace detblow {

// Binary (two-variable) form helpers; forms live over a 2-variable ring with
// variables written (s, t). A binary form factors as s^a * t^b * u(s, t)
// with u having nonzero coefficients at both ends, so gcds reduce to the
// univariate Euclidean algorithm on dehomogenizations.

// Dense univariate polynomial over F_p, coefficient of x^i at index i.
using UniPoly = std::vector<std::uint64_t>;

UniPoly uni_trim(UniPoly f);
int uni_degree(const UniPoly& f);
UniPoly uni_mul(const PrimeField& fp, const UniPoly& a, const UniPoly& b);
// Remainder and quotient of a by b, b nonzero.
std::pair<UniPoly, UniPoly> uni_divmod(const PrimeField& fp, const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(const PrimeField& fp, UniPoly a, UniPoly b); // monic
UniPoly uni_powmod(const PrimeField& fp, UniPoly base, std::uint64_t e, const UniPoly& mod);

// Roots in F_p with multiplicities, plus the degree of the rootless part.
struct UniRoots {
    std::vector<std::pair<std::uint64_t, int>> roots;
    int irrational_degree = 0;
};
UniRoots uni_roots(const PrimeField& fp, UniPoly f, std::uint64_t seed = 1);

// Monic gcd of binary forms, including shared powers of each variable.
// Throws a degenerate error when every input is zero (the caller reads that
// as "line contained in the variety").
Form binary_gcd(const std::vector<Form>& forms);

// Exact divisibility of binary forms (g | f), used by tests and callers.
bool binary_divides(const Form& g, const Form& f);

// Projective roots of a binary form: points (s0 : t0) in P^1(F_p) with
// multiplicities; irrational_degree counts the part with no F_p root.
struct BinaryRoots {
    std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, int>> points;
    int irrational_degree = 0;
};
BinaryRoots binary_roots(const Form& f, std::uint64_t seed = 1);

UniPoly dehomogenize(const Form& f); // coefficients in s after stripping, x = s/t

} // namespace detblow
