#ifndef MONOCURVE_IDEAL_OPS_HPP
#define MONOCURVE_IDEAL_OPS_HPP

#include <vector>

#include "monocurve/groebner.hpp"

namespace monocurve {

// Generators of ideal(gens) ∩ k[x_i : i not in drop], via a reduced GB under
// an elimination-block order with the drop block greatest.  Results live in
// the original ambient ring but involve no dropped variable.
// selection_weights: see buchberger.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& drop,
                                  const EffortCaps& caps = {},
                                  const std::vector<std::int64_t>& selection_weights = {});

// Generators of ideal(gens) : x_v^∞ for a homogeneous ideal.  When weights is
// empty the standard grading is used, otherwise the given positive weights;
// every generator must be homogeneous for that grading.  Computed by the
// reverse-lex trick: reduced GB under (weighted) degrevlex with x_v least,
// then each element divided by the largest power of x_v dividing it.
std::vector<Polynomial> saturate_by_variable(const std::vector<Polynomial>& gens, int v,
                                             const std::vector<std::int64_t>& weights = {},
                                             const EffortCaps& caps = {});

// Generators of ideal(gens) : (f), via the identity J : f = (J ∩ (f))/f with
// the intersection computed through a tag variable.
std::vector<Polynomial> quotient_by_element(const std::vector<Polynomial>& gens,
                                            const Polynomial& f, const EffortCaps& caps = {});

// g / f for g in the principal ideal (f); throws if the division leaves a
// remainder.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f, const MonomialOrder& o);

// Membership against a precomputed GB.
bool ideal_contains(const std::vector<Polynomial>& gb, const MonomialOrder& o, const Polynomial& f);

// Ideal equality via uniqueness of the reduced GB (degrevlex).
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const EffortCaps& caps = {});

} // namespace monocurve

#endif
