#include "monocurve/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monocurve {

namespace {

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > (std::int64_t{1} << 62) / b) throw ParameterOutOfRangeError("power overflows");
        r *= b;
    }
    return r;
}

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::int64_t bound(int c, std::int32_t d) {
    if (c < 2 || d < 2) throw ParameterOutOfRangeError("bound requires c, d >= 2");
    return ipow(d, c) - (d - 1) * ipow(d, c - 2);
}

LemmaResult lemma_min_product(int c, std::int32_t d, std::int64_t target_sum) {
    if (c < 2 || d < 2) throw ParameterOutOfRangeError("lemma requires c, d >= 2");
    if (target_sum < c || target_sum > static_cast<std::int64_t>(c) * d)
        throw InfeasibleSumError("no multiset of " + std::to_string(c) +
                                 " entries in [1, " + std::to_string(d) + "] sums to " +
                                 std::to_string(target_sum));
    LemmaResult res;
    res.minimum = 0;
    std::vector<std::int32_t> eps(static_cast<std::size_t>(c));
    auto rec = [&](auto&& self, int pos, std::int32_t low, std::int64_t left,
                   std::int64_t prod) -> void {
        int rest = c - pos;
        if (rest == 0) {
            if (left != 0) return;
            if (res.minimum == 0 || prod < res.minimum) {
                res.minimum = prod;
                res.argmins.clear();
            }
            if (prod == res.minimum) res.argmins.push_back(eps);
            return;
        }
        if (left < static_cast<std::int64_t>(rest) * low ||
            left > static_cast<std::int64_t>(rest) * d)
            return;
        for (std::int32_t v = low; v <= d; ++v) {
            eps[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v, left - v, prod * v);
        }
    };
    rec(rec, 0, 1, target_sum, 1);
    return res;
}

std::string to_string(KoszulStatus k) {
    return k == KoszulStatus::certified ? "certified" : "inconclusive";
}

AnalysisReport verify_theorem(const NumericalSemigroup& s, const EffortCaps& caps,
                              bool with_betti) {
    if (s.codim() < 2)
        throw ParameterOutOfRangeError("the theorem concerns codimension >= 2");
    GradedIdeal J = tangent_cone(defining_ideal(s, caps), caps);
    GradedInvariants inv = graded_invariants(J);
    MonomialIdeal L = leading_ideal(J);

    AnalysisReport r{s};
    r.c = inv.codim;
    r.d = inv.max_gen_degree;
    r.e = inv.multiplicity;
    r.bound = bound(r.c, r.d);
    if (inv.num_min_gens == inv.codim)
        r.classification = ConeClass::complete_intersection;
    else if (inv.num_min_gens == inv.codim + 1)
        r.classification = ConeClass::almost_complete_intersection;
    else
        r.classification = ConeClass::other;
    r.cohen_macaulay = is_cohen_macaulay(J, caps);
    r.theorem_ok =
        r.classification == ConeClass::complete_intersection || r.e <= r.bound;
    r.extremal =
        r.e == r.bound && r.classification != ConeClass::complete_intersection;
    std::int32_t lead_deg = 0;
    for (const Monomial& m : L.mingens()) lead_deg = std::max(lead_deg, m.degree());
    r.koszul = lead_deg == 2 ? KoszulStatus::certified : KoszulStatus::inconclusive;
    if (with_betti) r.betti_totals = betti_lcm(L).totals;
    return r;
}

NumericalSemigroup extremal_family(int c, std::int32_t d) {
    std::int64_t e = bound(c, d);
    std::vector<std::int64_t> gens = {e, e + 1, e + d};
    for (int i = 3; i <= c; ++i)
        gens.push_back(e + (static_cast<std::int64_t>(d) * d - d + 1) * ipow(d, i - 3));
    NumericalSemigroup s = canonicalize(gens);
    // n0 < ... < nc < 2 n0 forces minimality; anything else is a bug
    if (s.generators() != gens || gens.back() >= 2 * e)
        throw Error("extremal family generators are not minimal");
    return s;
}

std::int64_t extremal_betti_formula(int c, int i) {
    if (c < 2 || i < 0 || i > c)
        throw ParameterOutOfRangeError("betti formula needs c >= 2 and 0 <= i <= c");
    return binom(c - 2, i) + 3 * binom(c - 2, i - 1) + 2 * binom(c - 2, i - 2);
}

BettiTable extremal_graded_betti(int c, std::int32_t d) {
    if (c < 2 || d < 2) throw ParameterOutOfRangeError("graded formula needs c, d >= 2");
    BettiTable t;
    for (int i = 0; i <= c; ++i) {
        std::int64_t main = binom(c - 2, i) + 3 * binom(c - 2, i - 1);
        std::int64_t side = binom(c - 2, i - 2);
        if (main) t.graded[{i, i * d}] += main;
        if (side) {
            t.graded[{i, i * d - 1}] += side;       // merges with the next line at d = 2
            t.graded[{i, (i - 1) * d + 1}] += side;
        }
    }
    int top = 0;
    for (const auto& [key, val] : t.graded)
        if (val) top = std::max(top, key.first);
    t.totals.assign(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& [key, val] : t.graded)
        t.totals[static_cast<std::size_t>(key.first)] += val;
    return t;
}

ConsequenceChecks check_extremal_consequences(const NumericalSemigroup& s,
                                              const EffortCaps& caps) {
    AnalysisReport r = verify_theorem(s, caps);
    if (!r.extremal)
        throw NotExtremalError("multiplicity " + std::to_string(r.e) +
                               " differs from the bound " + std::to_string(r.bound) +
                               " (or the cone is a complete intersection)");
    int c = r.c;
    std::int32_t d = r.d;
    GradedIdeal J = tangent_cone(defining_ideal(s, caps), caps);
    MonomialIdeal L = leading_ideal(J);

    ConsequenceChecks out;

    // (1) L = (x1^d, ..., xc^d, x1^{d-1} x2) after permuting x1..xc
    int nv = J.ambient;
    std::vector<Monomial> shape;
    for (int i = 1; i <= c; ++i) shape.push_back(variable(nv, i, d));
    Monomial mixed(nv);
    mixed.e[1] = d - 1;
    mixed.e[2] = 1;
    shape.push_back(mixed);
    MonomialIdeal expected(nv, std::move(shape));
    bool uses_x0 = false;
    for (const Monomial& m : L.mingens())
        if (m.e[0] > 0) uses_x0 = true;
    if (!uses_x0) {
        std::vector<int> perm(static_cast<std::size_t>(c));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::vector<Monomial> mapped;
            for (const Monomial& m : L.mingens()) {
                Monomial im(nv);
                for (int k = 1; k <= c; ++k)
                    im.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)])] =
                        m.e[static_cast<std::size_t>(k)];
                mapped.push_back(std::move(im));
            }
            if (MonomialIdeal(nv, std::move(mapped)) == expected) {
                out.leading_ideal_shape = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // (2)
    out.aci_and_cm = r.classification == ConeClass::almost_complete_intersection &&
                     r.cohen_macaulay;

    // (3), (4)
    BettiTable bt = betti_lcm(L);
    BettiTable want = extremal_graded_betti(c, d);
    out.betti_totals_match = static_cast<int>(bt.totals.size()) == c + 1;
    if (out.betti_totals_match)
        for (int i = 0; i <= c; ++i)
            if (bt.totals[static_cast<std::size_t>(i)] != extremal_betti_formula(c, i))
                out.betti_totals_match = false;
    out.betti_graded_match = bt.graded == want.graded;

    // (5) the linkage identity in k[x1..xc]
    std::vector<Monomial> pure;
    for (int i = 0; i < c; ++i) pure.push_back(variable(c, i, d));
    Monomial link(c);
    link.e[0] = d - 1;
    link.e[1] = 1;
    std::vector<Monomial> target = {variable(c, 0), variable(c, 1, d - 1)};
    for (int i = 2; i < c; ++i) target.push_back(variable(c, i, d));
    out.colon_linkage =
        colon(MonomialIdeal(c, std::move(pure)), link) == MonomialIdeal(c, std::move(target));

    return out;
}

KoszulStatus koszul_witness(const NumericalSemigroup& s, const EffortCaps& caps) {
    return verify_theorem(s, caps).koszul;
}

std::int32_t min_relation_degree_bound(std::int64_t n0, int c) {
    if (n0 < 3 || c < 2)
        throw ParameterOutOfRangeError("degree reasoning needs n0 >= 3 and c >= 2");
    auto factors_into = [&](auto&& self, std::int64_t rem, int count, std::int64_t low,
                            std::int32_t d) -> bool {
        if (count == 0) return rem == 1;
        for (std::int64_t v = low; v <= d; ++v)
            if (rem % v == 0 && self(self, rem / v, count - 1, v, d)) return true;
        return false;
    };
    for (std::int32_t d = 2;; ++d) {
        if (factors_into(factors_into, n0, c, 2, d)) return d;
        if (n0 <= bound(c, d)) return d;
    }
}

bool quadratic_gap_check(const NumericalSemigroup& s, const EffortCaps& caps) {
    AnalysisReport r = verify_theorem(s, caps);
    if (r.d != 2)
        throw NotQuadraticError("tangent cone has a minimal generator of degree " +
                                std::to_string(r.d));
    return r.e <= r.bound || r.e == ipow(2, r.c);
}

} // namespace monocurve
