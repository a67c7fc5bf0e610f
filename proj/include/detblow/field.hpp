#pragma once

#include <cstdint>

#include "detblow/error.hpp"

namespace detblow {

inline constexpr std::uint64_t kMersenne31 = (std::uint64_t(1) << 31) - 1;
inline constexpr std::uint64_t kDefaultPrime = kMersenne31;

bool is_odd_prime(std::uint64_t p);

// Arithmetic in F_p, p an odd prime < 2^31. Scalars are residues in [0, p),
// so products of two scalars fit in a uint64_t before reduction.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p >= (std::uint64_t(1) << 31) || !is_odd_prime(p))
            fail(Errc::invalid_input, "prime must be an odd prime below 2^31");
    }

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    // Reduces an arbitrary signed value into [0, p).
    std::uint64_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r);
    }

    std::uint64_t half(std::uint64_t a) const { return mul(a, inv(2)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_;
};

} // namespace detblow
