#ifndef MONOCURVE_GROEBNER_HPP
#define MONOCURVE_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "monocurve/polynomial.hpp"

namespace monocurve {

// Budget for a single Groebner-basis run.  Exceeding a cap raises
// EffortCapExceeded; partial results are never returned.
struct EffortCaps {
    std::int64_t max_pairs = 200000;
    std::int32_t max_degree = 400;
};

// Remainder of f on full division by B: no monomial of the result is
// divisible by any LM(b).  Deterministic: the first b whose leading monomial
// divides the current term is used.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& B,
                       const MonomialOrder& o);

// The unique reduced Groebner basis of ideal(gens): monic, auto-reduced,
// sorted by ascending leading monomial.  Zero input generators are ignored;
// the zero ideal yields {}.
//
// Pairs are processed degree-first.  selection_weights chooses the grading
// for that degree; pass the weights making the input homogeneous (the result
// does not depend on this, the pair schedule does).  When empty, the order's
// own weights are used if it has any, else the standard grading.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& o,
                                   const EffortCaps& caps = {},
                                   const std::vector<std::int64_t>& selection_weights = {});

} // namespace monocurve

#endif
