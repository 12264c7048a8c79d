#ifndef MONOCURVE_EXTREMAL_HPP
#define MONOCURVE_EXTREMAL_HPP

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include "monocurve/semigroup.hpp"
#include "monocurve/tangentcone.hpp"

namespace monocurve {

// d^c - (d-1) d^{c-2}, the multiplicity bound for non-complete-intersection
// tangent cones defined in degrees at most d.
std::int64_t bound(int c, std::int32_t d);

struct LemmaResult {
    std::int64_t minimum = 0;
    std::vector<std::vector<std::int32_t>> argmins; // ascending multisets
};

// Minimum of prod eps_i over multisets 1 <= eps_1 <= ... <= eps_c <= d with
// fixed sum, together with every achieving multiset, by exhaustive search.
LemmaResult lemma_min_product(int c, std::int32_t d, std::int64_t target_sum);

enum class KoszulStatus { certified, inconclusive };

std::string to_string(KoszulStatus k);

struct AnalysisReport {
    explicit AnalysisReport(NumericalSemigroup s) : semigroup(std::move(s)) {}

    NumericalSemigroup semigroup;
    int c = 0;
    std::int32_t d = 0;     // largest minimal-generator degree of J
    std::int64_t e = 0;     // multiplicity of the tangent cone
    std::int64_t bound = 0; // d^c - (d-1) d^{c-2}
    ConeClass classification = ConeClass::other;
    bool cohen_macaulay = false;
    bool theorem_ok = false; // CI, or e <= bound
    bool extremal = false;   // e = bound and not CI
    KoszulStatus koszul = KoszulStatus::inconclusive;
    std::vector<std::int64_t> betti_totals; // filled when requested
};

// Full pipeline: defining ideal, tangent cone, invariants, classification,
// Cohen-Macaulay test, bound comparison.  Requires codim >= 2.
AnalysisReport verify_theorem(const NumericalSemigroup& s, const EffortCaps& caps = {},
                              bool with_betti = false);

// <e, e+1, e+d, e+(d^2-d+1)d^{i-3} for 3 <= i <= c> with e = bound(c, d);
// the listed values are verified to be a minimal generating set.
NumericalSemigroup extremal_family(int c, std::int32_t d);

// C(c-2,i) + 3 C(c-2,i-1) + 2 C(c-2,i-2)
std::int64_t extremal_betti_formula(int c, int i);

// Expected graded Betti table of the extremal leading ideal: entries
// beta_{i,id} = C(c-2,i) + 3 C(c-2,i-1) and, in the two lower strands,
// beta_{i,id-1} = beta_{i,(i-1)d+1} = C(c-2,i-2); they coincide and add up
// when d = 2.
BettiTable extremal_graded_betti(int c, std::int32_t d);

struct ConsequenceChecks {
    bool leading_ideal_shape = false; // L = (x1^d..xc^d, x1^{d-1}x2) up to permutation
    bool aci_and_cm = false;
    bool betti_totals_match = false;
    bool betti_graded_match = false;
    bool colon_linkage = false; // (x1^d..xc^d) : x1^{d-1}x2 = (x1, x2^{d-1}, x3^d..xc^d)

    bool all_pass() const {
        return leading_ideal_shape && aci_and_cm && betti_totals_match &&
               betti_graded_match && colon_linkage;
    }
};

// The five structural consequences of extremality; throws NotExtremalError
// unless verify_theorem reports the instance extremal.
ConsequenceChecks check_extremal_consequences(const NumericalSemigroup& s,
                                              const EffortCaps& caps = {});

// certified iff the leading ideal of the tangent cone is generated in degree
// 2 (a sufficient Koszul condition); inconclusive otherwise.
KoszulStatus koszul_witness(const NumericalSemigroup& s, const EffortCaps& caps = {});

// Least d >= 2 admitting a tangent cone of multiplicity n0 in codimension c
// defined by equations of degree <= d: either n0 is a product of c factors
// in [2, d] (complete intersection) or n0 <= bound(c, d).
std::int32_t min_relation_degree_bound(std::int64_t n0, int c);

// For quadratic tangent cones: e <= 2^c - 2^{c-2} or e = 2^c.
bool quadratic_gap_check(const NumericalSemigroup& s, const EffortCaps& caps = {});

} // namespace monocurve

#endif
