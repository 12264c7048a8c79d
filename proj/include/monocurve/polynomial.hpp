#ifndef MONOCURVE_POLYNOMIAL_HPP
#define MONOCURVE_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monocurve/order.hpp"

namespace monocurve {

using Rational = boost::multiprecision::cpp_rational;

struct Term {
    Monomial m;
    Rational c;

    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

// Exact multivariate polynomial over the rationals.  Terms are kept in a
// canonical storage order (exponent vector descending) with no zero
// coefficients and no duplicate monomials, so operator== is ideal-free
// structural equality.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    // Combines duplicates, drops zeros, sorts.
    Polynomial(int nvars, std::vector<Term> terms);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial monomial(Monomial m, Rational c = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;

    // Largest term under the given order; throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& o) const;

    // Max total degree over terms; -1 for the zero polynomial.
    std::int32_t degree() const;
    std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const;
    bool is_homogeneous() const;
    bool is_homogeneous(const std::vector<std::int64_t>& w) const;

  private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    void normalize();
};

Polynomial operator*(const Polynomial& f, const Monomial& m);

// x_i -> x_{image[i]} into a ring with new_nvars variables; image injective.
Polynomial rename_vars(const Polynomial& f, int new_nvars, const std::vector<int>& image);
// Contract to the subring spanned by keep (old indices, in new-index order).
// Throws if f involves a variable outside keep.
Polynomial restrict_vars(const Polynomial& f, const std::vector<int>& keep);
// Substitute x_v := 0.
Polynomial set_var_zero(const Polynomial& f, int v);
// Largest k with x_v^k dividing f; 0 for the zero polynomial.
std::int32_t var_min_exponent(const Polynomial& f, int v);
// f / x_v^k, requires x_v^k | f.
Polynomial divide_by_var_power(const Polynomial& f, int v, std::int32_t k);
bool uses_var(const Polynomial& f, int v);

// Text syntax: variables x0..xN (plus `u` for the homogenization slot when
// with_u is set, mapped to the final index), `^` exponent, `*` product,
// `+`/`-` terms, rational coefficients like 2 or 3/2.
Polynomial parse_polynomial(const std::string& text, int num_x_vars, bool with_u = false);
Monomial parse_monomial(const std::string& text, int num_x_vars);

// Inverse of the syntax above: terms printed in degrevlex-descending order,
// factors in index-ascending order.  u_index >= 0 prints that slot as `u`.
std::string to_string(const Polynomial& f, int u_index = -1);
std::string to_string(const Monomial& m, int u_index = -1);
std::string to_string(const Rational& c);

} // namespace monocurve

#endif
