#include "monocurve/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace monocurve {

namespace {

struct OrderGreater {
    const MonomialOrder* o;
    bool operator()(const Monomial& a, const Monomial& b) const { return o->greater(a, b); }
};

// Work representation during division: begin() is the leading term.
using TermMap = std::map<Monomial, Rational, OrderGreater>;

TermMap to_map(const Polynomial& f, const MonomialOrder& o) {
    TermMap p(OrderGreater{&o});
    for (const Term& t : f.terms()) p.emplace(t.m, t.c);
    return p;
}

Polynomial from_map(int nvars, const TermMap& p) {
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const auto& [m, c] : p) ts.push_back({m, c});
    return Polynomial(nvars, std::move(ts));
}

// p -= c * m * g
void axpy_sub(TermMap& p, const Rational& c, const Monomial& m, const Polynomial& g) {
    for (const Term& t : g.terms()) {
        Monomial key = t.m * m;
        auto [it, fresh] = p.try_emplace(std::move(key), 0);
        it->second -= c * t.c;
        if (it->second == 0) p.erase(it);
    }
}

Polynomial nf_impl(TermMap p, const std::vector<Polynomial>& B, const std::vector<Term>& lts,
                   const MonomialOrder& o, int nvars) {
    TermMap r(OrderGreater{&o});
    while (!p.empty()) {
        auto lt = *p.begin();
        bool reduced = false;
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (!divides(lts[k].m, lt.first)) continue;
            axpy_sub(p, lt.second / lts[k].c, quotient(lt.first, lts[k].m), B[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.insert(lt);
            p.erase(p.begin());
        }
    }
    return from_map(nvars, r);
}

std::vector<Term> leading_terms(const std::vector<Polynomial>& B, const MonomialOrder& o) {
    std::vector<Term> lts;
    lts.reserve(B.size());
    for (const Polynomial& b : B) lts.push_back(b.leading_term(o));
    return lts;
}

struct Pair {
    int i, j;
    Monomial lcm;
    std::int64_t deg;
};

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& B,
                       const MonomialOrder& o) {
    std::vector<Polynomial> nz;
    for (const Polynomial& b : B)
        if (!b.is_zero()) nz.push_back(b);
    return nf_impl(to_map(f, o), nz, leading_terms(nz, o), o, f.nvars());
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& o,
                                   const EffortCaps& caps,
                                   const std::vector<std::int64_t>& selection_weights) {
    std::vector<Polynomial> G;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(g * (Rational(1) / g.leading_term(o).c));
    }
    if (G.empty()) return {};
    int nvars = G[0].nvars();
    const std::vector<std::int64_t>& selw =
        !selection_weights.empty() ? selection_weights : o.weights();
    if (!selw.empty() && static_cast<int>(selw.size()) != nvars)
        throw DimensionMismatchError("selection weights do not match ambient");
    auto sel_deg = [&](const Monomial& m) -> std::int64_t {
        if (selw.empty()) return m.degree();
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) s += selw[i] * m.e[i];
        return s;
    };
    std::vector<Term> lts = leading_terms(G, o);

    // Selection: lowest lcm degree first, then smaller lcm under o, then (i, j).
    auto pair_after = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        int c = o.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(pair_after)> queue(pair_after);
    // Pairs already handled, including ones discarded by the product
    // criterion; the chain criterion below requires this bookkeeping.
    std::set<std::pair<int, int>> done;

    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (coprime(lts[static_cast<std::size_t>(i)].m, lts[static_cast<std::size_t>(j)].m)) {
                done.emplace(i, j);
                continue;
            }
            Monomial l = lcm(lts[static_cast<std::size_t>(i)].m, lts[static_cast<std::size_t>(j)].m);
            std::int64_t d = sel_deg(l);
            queue.push(Pair{i, j, std::move(l), d});
        }
    };
    for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    std::int64_t pops = 0;
    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        if (++pops > caps.max_pairs) throw EffortCapExceeded("S-pair limit exceeded");
        done.emplace(pr.i, pr.j);
        if (pr.lcm.degree() > caps.max_degree)
            throw EffortCapExceeded("monomial degree limit exceeded");

        bool chained = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(lts[static_cast<std::size_t>(k)].m, pr.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(pr.i, k)) && done.count(key(k, pr.j))) chained = true;
        }
        if (chained) continue;

        const Polynomial& fi = G[static_cast<std::size_t>(pr.i)];
        const Polynomial& fj = G[static_cast<std::size_t>(pr.j)];
        Polynomial s = fi * quotient(pr.lcm, lts[static_cast<std::size_t>(pr.i)].m) -
                       fj * quotient(pr.lcm, lts[static_cast<std::size_t>(pr.j)].m);
        Polynomial r = nf_impl(to_map(s, o), G, lts, o, nvars);
        if (r.is_zero()) continue;
        if (r.degree() > caps.max_degree) throw EffortCapExceeded("monomial degree limit exceeded");
        r = r * (Rational(1) / r.leading_term(o).c);
        G.push_back(std::move(r));
        lts.push_back(G.back().leading_term(o));
        push_pairs(static_cast<int>(G.size()) - 1);
    }

    // Minimal generators of the leading ideal: ascending scan keeps only
    // elements whose LM no earlier kept LM divides.
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return o.less(lts[a].m, lts[b].m); });
    std::vector<Polynomial> minimal;
    std::vector<Monomial> kept_lm;
    for (std::size_t i : idx) {
        bool redundant = false;
        for (const Monomial& m : kept_lm)
            if (divides(m, lts[i].m)) {
                redundant = true;
                break;
            }
        if (!redundant) {
            minimal.push_back(G[i]);
            kept_lm.push_back(lts[i].m);
        }
    }

    // Tail-reduce until stable; leading monomials are pairwise indivisible so
    // they survive every pass.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial red = normal_form(minimal[i], others, o);
            if (red != minimal[i]) {
                minimal[i] = std::move(red);
                changed = true;
            }
        }
    }
    return minimal;
}

} // namespace monocurve
