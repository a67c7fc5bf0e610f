#include "detblow/liaison.hpp"

#include <string>

namespace detblow {

LinkageData residual(long long a, long long b, long long deg_c, long long g_c) {
    if (a < 1 || b < 1) fail(Errc::invalid_input, "linking surface degrees must be positive");
    if (a * b <= deg_c) fail(Errc::invalid_input, "complete intersection degree must exceed deg C");
    LinkageData link;
    link.a = a;
    link.b = b;
    link.deg_c = deg_c;
    link.g_c = g_c;
    link.deg_c_prime = a * b - deg_c;
    long long diff = deg_c - link.deg_c_prime;
    long long twice = (a + b - 4) * diff;
    if (twice % 2 != 0) fail(Errc::invalid_input, "invalid linkage data: genus would not be integral");
    link.g_c_prime = g_c - twice / 2;
    return link;
}

} // namespace detblow
