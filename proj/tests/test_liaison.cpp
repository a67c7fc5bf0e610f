#include <doctest.h>

#include "detblow/liaison.hpp"
#include "detblow/rng.hpp"

using namespace detblow;

TEST_CASE("paper linkages") {
    LinkageData ex1 = residual(4, 4, 7, 5);
    CHECK(ex1.deg_c_prime == 9);
    CHECK(ex1.g_c_prime == 9);
    CHECK(2 * ex1.g_c_prime - 2 == 16);

    LinkageData ex2 = residual(4, 4, 6, 3);
    CHECK(ex2.deg_c_prime == 10);
    CHECK(ex2.g_c_prime == 11);
    CHECK(2 * ex2.g_c_prime - 2 == 20);
}

TEST_CASE("self-linked symmetry: deg C' = deg C gives g' = g") {
    LinkageData l = residual(4, 4, 8, 7);
    CHECK(l.deg_c_prime == 8);
    CHECK(l.g_c_prime == 7);
}

TEST_CASE("residual is an involution") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        long long a = 2 + static_cast<long long>(rng.below(5));
        long long b = 2 + static_cast<long long>(rng.below(5));
        long long deg_c = 1 + static_cast<long long>(rng.below(a * b - 1));
        long long g_c = static_cast<long long>(rng.below(20));
        if ((a + b) % 2 == 1 && (deg_c - (a * b - deg_c)) % 2 != 0) continue;
        LinkageData once = residual(a, b, deg_c, g_c);
        LinkageData twice = residual(a, b, once.deg_c_prime, once.g_c_prime);
        CHECK(twice.deg_c_prime == deg_c);
        CHECK(twice.g_c_prime == g_c);
    }
}

TEST_CASE("invalid linkage data is rejected") {
    CHECK_THROWS_AS(residual(2, 2, 4, 0), Error); // ab = deg C
    CHECK_THROWS_AS(residual(0, 4, 1, 0), Error);
    // (a+b-4)(2 deg C - ab) is always even, so integral inputs always give an
    // integral residual genus; the guard stays for non-integral extensions.
    CHECK(residual(3, 2, 3, 1).g_c_prime == 1);
}
