#include "detblow/field.hpp"

namespace detblow {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    // Deterministic Miller-Rabin; the listed bases decide primality below 3.2e18.
    std::uint64_t d = p - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % p == 0) continue;
        std::uint64_t x = powmod64(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, p);
            if (x == p - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod64(a % p_, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) fail(Errc::invalid_input, "inverse of zero");
    return pow(a, p_ - 2);
}

} // namespace detblow
