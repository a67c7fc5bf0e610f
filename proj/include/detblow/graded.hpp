#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "detblow/form.hpp"
#include "detblow/rank.hpp"

namespace detblow {

long long binom(long long n, long long k);

// Monomial basis of one graded piece R_t with index lookup; columns are in
// descending graded-lex order, matching form printing.
class MonomialBasis {
public:
    MonomialBasis(std::size_t vars, int degree);
    std::size_t size() const { return list_.size(); }
    const Monomial& at(std::size_t i) const { return list_[i]; }
    std::size_t index(const Monomial& m) const;
    std::vector<std::uint32_t> coefficient_row(const Form& f, const Monomial& shift) const;

private:
    std::vector<Monomial> list_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Graded ideal given by homogeneous generators; graded-piece dimensions are
// computed as ranks of Macaulay-style coefficient matrices (rows = monomial
// multiples of generators) and cached. Queries are safe from several threads.
class GradedIdeal {
public:
    GradedIdeal(Ring ring, std::vector<Form> generators);

    const Ring& ring() const { return ring_; }
    int ambient_dim() const { return static_cast<int>(ring_.vars) - 1; }
    const std::vector<Form>& generators() const { return gens_; }
    int max_generator_degree() const;

    long long ring_piece_dimension(int t) const; // C(t + n, n)
    long long piece_dimension(int t) const;      // dim (I)_t, cached
    long long hilbert(int t) const;              // C(t + n, n) - dim (I)_t

    // Echelon of the degree-t Macaulay matrix (uncached, for quotient work).
    std::shared_ptr<RowEchelon> piece_echelon(int t) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<int, long long> dims;
    };

    Ring ring_;
    std::vector<Form> gens_;
    std::shared_ptr<Cache> cache_; // shared across copies; the ideal is immutable

    long long compute_dimension(int t) const;
};

int sigma_invariant(const GradedIdeal& ideal, int cap); // throws cap_exceeded

struct PolyFit {
    int dim = 0;                   // degree of the Hilbert polynomial
    long long degree = 0;          // dim! * leading coefficient
    long long sectional_genus = 0; // from the (dim-1)-fold difference
    int stabilized_at = 0;
};

// Fits the Hilbert polynomial from stabilized finite differences; requires
// the (dim+1)-st difference to vanish on three consecutive degrees <= cap,
// none of them below the largest generator degree.
PolyFit hilbert_poly_fit(const GradedIdeal& ideal, int cap);

// Same fit on an explicit table H(0..T); `values[t]` = H(t). Stabilization
// windows may not start below min_start.
PolyFit fit_from_values(const std::vector<long long>& values, int cap, int min_start = 0);

// Hilbert table rows: t, H, delta H, ..., delta^n H.
std::vector<std::vector<long long>> hilbert_table(const GradedIdeal& ideal, int t_max, int orders);

struct BettiEntry {
    int index = 1; // homological position: 1 = generators, 2 = first syzygies
    int twist = 0;
    long long multiplicity = 0;
};

struct BettiTable {
    std::vector<BettiEntry> entries;
    void normalize();
};

// Hilbert function of S/I from a free resolution's twists:
// H(t) = C(t+n, n) - sum_i (-1)^(i-1) sum mult * C(t - twist + n, n).
long long betti_to_hilbert(const BettiTable& table, std::size_t ring_vars, int t);

// True when the ideal's graded piece fills the whole ring piece at some
// t <= cap: the Nullstellensatz-at-degree surrogate for emptiness.
bool fills_ring_by(const GradedIdeal& ideal, int cap, int* fill_degree = nullptr);

} // namespace detblow
