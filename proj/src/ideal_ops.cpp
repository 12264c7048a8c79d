#include "monocurve/ideal_ops.hpp"

#include <algorithm>

namespace monocurve {

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& drop,
                                  const EffortCaps& caps,
                                  const std::vector<std::int64_t>& selection_weights) {
    if (gens.empty()) return {};
    int nvars = gens[0].nvars();
    MonomialOrder o = MonomialOrder::elim_block(nvars, drop);
    std::vector<Polynomial> gb = buchberger(gens, o, caps, selection_weights);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb) {
        // Under the block order a drop-free leading monomial forces the whole
        // element to be drop-free.
        bool free_of_drop = true;
        for (int v : drop)
            if (uses_var(g, v)) {
                free_of_drop = false;
                break;
            }
        if (free_of_drop) kept.push_back(g);
    }
    return kept;
}

std::vector<Polynomial> saturate_by_variable(const std::vector<Polynomial>& gens, int v,
                                             const std::vector<std::int64_t>& weights,
                                             const EffortCaps& caps) {
    if (gens.empty()) return {};
    int nvars = gens[0].nvars();
    if (v < 0 || v >= nvars) throw ParameterOutOfRangeError("saturation variable outside ambient");
    if (!weights.empty() && static_cast<int>(weights.size()) != nvars)
        throw DimensionMismatchError("weight vector does not match ambient");
    for (const Polynomial& g : gens) {
        bool ok = weights.empty() ? g.is_homogeneous() : g.is_homogeneous(weights);
        if (!ok) throw InputError("saturation requires homogeneous generators");
    }
    MonomialOrder o = weights.empty() ? MonomialOrder::degrevlex_with_least(nvars, {v})
                                      : MonomialOrder::weighted_degrevlex(weights, {v});
    std::vector<Polynomial> gb = buchberger(gens, o, caps);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb) {
        Polynomial h = divide_by_var_power(g, v, var_min_exponent(g, v));
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    return out;
}

std::vector<Polynomial> quotient_by_element(const std::vector<Polynomial>& gens,
                                            const Polynomial& f, const EffortCaps& caps) {
    if (f.is_zero()) throw InputError("quotient by the zero element");
    std::vector<Polynomial> nz;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return {};
    int nvars = f.nvars();
    // Tag ring k[x0..x{n-1}, w] with w at index n: J ∩ (f) is the elimination
    // of w from w·J + (1 − w)·(f).
    int w = nvars;
    std::vector<int> id(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) id[static_cast<std::size_t>(i)] = i;
    Polynomial wpoly = Polynomial::monomial(variable(nvars + 1, w));
    std::vector<Polynomial> tagged;
    for (const Polynomial& g : nz) tagged.push_back(rename_vars(g, nvars + 1, id) * wpoly);
    Polynomial fbig = rename_vars(f, nvars + 1, id);
    tagged.push_back(fbig - fbig * wpoly);
    std::vector<Polynomial> inter = eliminate(tagged, {w}, caps);
    MonomialOrder o = MonomialOrder::degrevlex(nvars);
    std::vector<int> keep = id;
    std::vector<Polynomial> out;
    for (const Polynomial& g : inter) out.push_back(divide_exact(restrict_vars(g, keep), f, o));
    return out;
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f, const MonomialOrder& o) {
    if (f.is_zero()) throw InputError("division by zero polynomial");
    Polynomial p = g;
    Polynomial q(g.nvars());
    const Term lf = f.leading_term(o);
    while (!p.is_zero()) {
        const Term lt = p.leading_term(o);
        if (!divides(lf.m, lt.m)) throw Error("inexact polynomial division");
        Polynomial step = Polynomial::monomial(quotient(lt.m, lf.m), lt.c / lf.c);
        q = q + step;
        p = p - step * f;
    }
    return q;
}

bool ideal_contains(const std::vector<Polynomial>& gb, const MonomialOrder& o,
                    const Polynomial& f) {
    return normal_form(f, gb, o).is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const EffortCaps& caps) {
    int nvars = !a.empty() ? a[0].nvars() : (!b.empty() ? b[0].nvars() : 0);
    MonomialOrder o = MonomialOrder::degrevlex(nvars);
    return buchberger(a, o, caps) == buchberger(b, o, caps);
}

} // namespace monocurve
