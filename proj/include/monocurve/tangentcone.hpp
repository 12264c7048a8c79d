#ifndef MONOCURVE_TANGENTCONE_HPP
#define MONOCURVE_TANGENTCONE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/monomideal.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

// Homogeneous ideal J in P = k[x0..x{ambient-1}] with its reduced Groebner
// basis under the ambient degrevlex (x_{ambient-1} largest) and the multiset
// of minimal homogeneous generator degrees.
struct GradedIdeal {
    int ambient = 0;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> gb;
    std::vector<std::int32_t> min_gen_degrees; // ascending
};

enum class ConeClass {
    complete_intersection,
    almost_complete_intersection,
    other,
};

std::string to_string(ConeClass cls);

struct GradedInvariants {
    int dim = 0;
    int codim = 0;
    std::int64_t multiplicity = 0;
    IntPoly hilbert_numerator;        // of P/leading_ideal, equal to that of P/J
    std::int32_t max_gen_degree = 0;  // d: largest minimal-generator degree
    int num_min_gens = 0;             // mu
};

// Validates homogeneity, computes the canonical reduced basis and the
// minimal generator degrees.
GradedIdeal make_graded_ideal(int ambient, std::vector<Polynomial> generators,
                              const EffortCaps& caps = {});

// Ideal of initial (lowest-degree) forms of the curve ideal I.  Each binomial
// is made weight-homogeneous with a fresh variable u on its higher-degree
// term, the result is saturated by u, and u is then set to zero.  The run is
// rejected unless dim P/J = 1 and e(P/J) = n0.
GradedIdeal tangent_cone(const BinomialIdeal& I, const EffortCaps& caps = {});

// Degrees of a minimal homogeneous generating set: in each degree e the count
// is dim J_e - dim((x)J)_e, by exact rank over the monomials of degree e.
std::vector<std::int32_t> minimal_generator_degrees(const GradedIdeal& J);

// (LM(g) : g in J), minimalized.
MonomialIdeal leading_ideal(const GradedIdeal& J);

// dim/codim/multiplicity/Hilbert numerator via the leading ideal; d and mu
// from the minimal generator degrees.
GradedInvariants graded_invariants(const GradedIdeal& J);

// complete_intersection iff mu = codim; almost_complete_intersection iff
// mu = codim + 1.
ConeClass classify(const GradedIdeal& J);

// True iff x0 is a nonzerodivisor on P/J, i.e. J : x0 = J; the standard
// Cohen-Macaulay criterion for one-dimensional semigroup tangent cones.
bool is_cohen_macaulay(const GradedIdeal& J, const EffortCaps& caps = {});

} // namespace monocurve

#endif
