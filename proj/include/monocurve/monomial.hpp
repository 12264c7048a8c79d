#ifndef MONOCURVE_MONOMIAL_HPP
#define MONOCURVE_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

// Exponent vector over a fixed ambient variable set x0..x{n-1}.
struct Monomial {
    std::vector<std::int32_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    std::int32_t degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Plain container order: canonical storage key, not a monomial order.
    bool operator<(const Monomial& o) const { return e < o.e; }
};

inline void check_same_vars(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw DimensionMismatchError("monomials live in different ambient rings");
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    check_same_vars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

inline Monomial variable(int nvars, int v, std::int32_t power = 1) {
    Monomial m(nvars);
    m.e[static_cast<std::size_t>(v)] = power;
    return m;
}

} // namespace monocurve

#endif
