#pragma once

#include "detblow/error.hpp"

namespace detblow {

struct LinkageData {
    long long a = 0, b = 0;   // degrees of the linking surfaces
    long long deg_c = 0, g_c = 0;
    long long deg_c_prime = 0, g_c_prime = 0;
};

// Residual intersection arithmetic: deg C' = a*b - deg C and
// g(C) - g(C') = ((a+b)/2 - 2) (deg C - deg C').
LinkageData residual(long long a, long long b, long long deg_c, long long g_c);

} // namespace detblow
