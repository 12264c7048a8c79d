#ifndef MONOCURVE_TORIC_HPP
#define MONOCURVE_TORIC_HPP

#include "monocurve/ideal_ops.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

// The toric defining ideal I = ker(x_j -> t^{n_j}) of the monomial curve of
// S = <n_0, ..., n_c>, presented by pure-difference binomials in x0..xc.
struct BinomialIdeal {
    NumericalSemigroup semigroup;
    std::vector<Polynomial> generators;
};

// Generators of I via elimination of t from {x_j - t^{n_j}}.  Every output
// binomial balances the weights: sum(alpha_j n_j) is the same on both sides.
BinomialIdeal defining_ideal(const NumericalSemigroup& S, const EffortCaps& caps = {});

// The least degree of a form in the tangent-cone ideal containing a pure
// power of x_i: the smallest delta >= 1 admitting delta*n_i = sum(alpha_j n_j)
// with alpha != delta*e_i and sum(alpha_j) >= delta.  Always <= n_0.
std::int32_t critical_degree(const NumericalSemigroup& S, int i);

// A binomial x_i^d - prod(x_j^{alpha_j}) in I with sum(alpha_j) >= d.
// Deterministic: alpha maximizes sum(alpha_j), ties broken lexicographically
// least.  Requires d >= critical_degree(S, i).
Polynomial power_witness(const NumericalSemigroup& S, int i, std::int32_t d);

} // namespace monocurve

#endif
