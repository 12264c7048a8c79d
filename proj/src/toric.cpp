#include "monocurve/toric.hpp"

#include <algorithm>

namespace monocurve {

namespace {

std::int64_t weight(const NumericalSemigroup& S, const Monomial& m) {
    const auto& gens = S.generators();
    std::int64_t w = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) w += gens[j] * m.e[j];
    return w;
}

} // namespace

BinomialIdeal defining_ideal(const NumericalSemigroup& S, const EffortCaps& caps) {
    const auto& gens = S.generators();
    int c = S.codim();
    if (c < 1) throw ParameterOutOfRangeError("defining ideal needs embedding dimension >= 2");
    int nbig = c + 2; // x0..xc plus t at index c+1
    std::vector<Polynomial> graph;
    std::vector<std::int64_t> selw;
    for (int j = 0; j <= c; ++j) {
        Monomial tpow = variable(nbig, c + 1, static_cast<std::int32_t>(gens[static_cast<std::size_t>(j)]));
        graph.push_back(Polynomial::monomial(variable(nbig, j)) - Polynomial::monomial(tpow));
        selw.push_back(gens[static_cast<std::size_t>(j)]);
    }
    selw.push_back(1); // the graph ideal is homogeneous for wt(x_j) = n_j, wt(t) = 1
    std::vector<Polynomial> elim = eliminate(graph, {c + 1}, caps, selw);
    std::vector<int> keep(static_cast<std::size_t>(c) + 1);
    for (int j = 0; j <= c; ++j) keep[static_cast<std::size_t>(j)] = j;
    BinomialIdeal I{S, {}};
    for (const Polynomial& g : elim) {
        Polynomial h = restrict_vars(g, keep);
        if (h.num_terms() != 2 || h.terms()[0].c * h.terms()[1].c != -1 ||
            weight(S, h.terms()[0].m) != weight(S, h.terms()[1].m))
            throw Error("toric elimination produced a non-binomial generator");
        I.generators.push_back(std::move(h));
    }
    return I;
}

std::int32_t critical_degree(const NumericalSemigroup& S, int i) {
    const auto& gens = S.generators();
    int c = S.codim();
    if (i < 1 || i > c) throw ParameterOutOfRangeError("critical degree index outside 1..c");
    std::int64_t n0 = gens[0];
    std::int64_t ni = gens[static_cast<std::size_t>(i)];
    std::int64_t vmax = n0 * ni;
    if (vmax > 5000000) throw EffortCapExceeded("critical degree search too large");
    // max_parts[v] = largest number of generators summing to v, -1 if none.
    std::vector<std::int32_t> max_parts(static_cast<std::size_t>(vmax) + 1, -1);
    max_parts[0] = 0;
    for (std::int64_t v = 1; v <= vmax; ++v)
        for (std::int64_t g : gens)
            if (v >= g && max_parts[static_cast<std::size_t>(v - g)] >= 0)
                max_parts[static_cast<std::size_t>(v)] =
                    std::max(max_parts[static_cast<std::size_t>(v)],
                             max_parts[static_cast<std::size_t>(v - g)] + 1);
    for (std::int32_t delta = 1; delta <= n0; ++delta) {
        std::int64_t v = delta * ni;
        // Forcing one part n_j with j != i covers every representation other
        // than the excluded pure power delta*e_i.
        for (int j = 0; j <= c; ++j) {
            if (j == i) continue;
            std::int64_t g = gens[static_cast<std::size_t>(j)];
            if (v >= g && max_parts[static_cast<std::size_t>(v - g)] >= 0 &&
                1 + max_parts[static_cast<std::size_t>(v - g)] >= delta)
                return delta;
        }
    }
    throw Error("critical degree not found below n0"); // unreachable: x_i^{n0} - x_0^{n_i}
}

Polynomial power_witness(const NumericalSemigroup& S, int i, std::int32_t d) {
    const auto& gens = S.generators();
    int c = S.codim();
    if (i < 1 || i > c) throw ParameterOutOfRangeError("power witness index outside 1..c");
    if (d < critical_degree(S, i))
        throw DegreeTooSmallError("degree below the critical degree of x" + std::to_string(i));
    std::int64_t target = static_cast<std::int64_t>(d) * gens[static_cast<std::size_t>(i)];

    std::vector<std::int32_t> alpha(static_cast<std::size_t>(c) + 1, 0), best;
    std::int64_t best_total = -1;
    Monomial excluded = variable(c + 1, i, d);
    // Exhaustive representation search; alpha_0 first so the first max-total
    // hit is already the lexicographically least one.
    auto dfs = [&](auto&& self, int j, std::int64_t remaining, std::int64_t total) -> void {
        if (j == c + 1) {
            if (remaining != 0 || total < d) return;
            if (Monomial(alpha) == excluded) return;
            if (total > best_total) {
                best_total = total;
                best = alpha;
            }
            return;
        }
        std::int64_t g = gens[static_cast<std::size_t>(j)];
        // all later parts are >= g, so the total can grow by at most rem/g
        if (total + remaining / g < std::max<std::int64_t>(best_total + 1, d)) return;
        for (std::int64_t a = 0; a * g <= remaining; ++a) {
            alpha[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(a);
            self(self, j + 1, remaining - a * g, total + a);
        }
        alpha[static_cast<std::size_t>(j)] = 0;
    };
    dfs(dfs, 0, target, 0);
    if (best_total < 0) throw DegreeTooSmallError("no witness representation at this degree");
    return Polynomial::monomial(excluded) - Polynomial::monomial(Monomial(best));
}

} // namespace monocurve
