#include "detblow/monomial.hpp"

namespace detblow {

namespace {

void enumerate(std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == cur.e.size()) {
        cur.e[var] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.e[var] = static_cast<std::uint16_t>(v);
        enumerate(var + 1, remaining - v, cur, out);
    }
    cur.e[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t vars, int degree) {
    std::vector<Monomial> out;
    if (vars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    Monomial cur(vars);
    enumerate(0, degree, cur, out);
    return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t k = 0; k < m.e.size(); ++k) {
        if (m.e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[k];
        if (m.e[k] > 1) {
            s += "^";
            s += std::to_string(m.e[k]);
        }
    }
    if (s.empty()) s = "1";
    return s;
}

} // namespace detblow
