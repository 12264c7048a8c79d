#include "monocurve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace monocurve {

namespace {

// Least element of <gens> in each residue class mod m, by Dijkstra on the
// residue graph (edges r -> (r + g) mod m of weight g).
std::vector<std::int64_t> apery_table(const std::vector<std::int64_t>& gens, std::int64_t m) {
    const std::int64_t INF = -1;
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), INF);
    using Node = std::pair<std::int64_t, std::int64_t>; // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
    dist[0] = 0;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [v, r] = pq.top();
        pq.pop();
        if (dist[static_cast<std::size_t>(r)] != v) continue;
        for (std::int64_t g : gens) {
            std::int64_t nr = (r + g) % m;
            std::int64_t nv = v + g;
            auto& slot = dist[static_cast<std::size_t>(nr)];
            if (slot == INF || nv < slot) {
                slot = nv;
                pq.push({nv, nr});
            }
        }
    }
    return dist;
}

// Membership of n in the monoid generated by gens, by boolean DP up to n.
bool monoid_contains(const std::vector<std::int64_t>& gens, std::int64_t n) {
    if (n < 0) return false;
    if (n == 0) return true;
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= n; ++v)
        for (std::int64_t g : gens)
            if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reach[static_cast<std::size_t>(n)] != 0;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> minimal_gens)
    : gens_(std::move(minimal_gens)) {
    apery_ = apery_table(gens_, gens_.front());
}

bool NumericalSemigroup::contains(std::int64_t n) const {
    if (n < 0) return false;
    return n >= apery_[static_cast<std::size_t>(n % gens_.front())];
}

std::int64_t NumericalSemigroup::frobenius() const {
    // max of the Apery set minus n0; equals -1 exactly when S = N.
    std::int64_t mx = 0;
    for (std::int64_t a : apery_) mx = std::max(mx, a);
    return mx - gens_.front();
}

NumericalSemigroup canonicalize(const std::vector<std::int64_t>& raw) {
    if (raw.empty()) throw EmptyInputError("canonicalize: empty generating set");
    std::vector<std::int64_t> v;
    for (std::int64_t x : raw) {
        if (x <= 0) throw NotNumericalError("canonicalize: generators must be positive");
        v.push_back(x);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x);
    if (g != 1) throw NotNumericalError("canonicalize: gcd of generators is not 1");
    // x is a minimal generator iff it is not a sum of two nonzero elements of
    // the monoid; it suffices to test x - y for the smaller generators y.
    std::vector<std::int64_t> minimal;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool redundant = false;
        for (std::int64_t y : v) {
            if (y >= v[i]) break;
            if (monoid_contains(v, v[i] - y)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(v[i]);
    }
    return NumericalSemigroup(std::move(minimal));
}

std::vector<std::int64_t> apery_set(const NumericalSemigroup& s, std::int64_t m) {
    if (m <= 0 || !s.contains(m))
        throw NotInSemigroupError("apery_set: m must be a nonzero element of S");
    return apery_table(s.generators(), m);
}

void enumerate_semigroups(int embdim, std::int64_t max_generator,
                          const std::function<void(const NumericalSemigroup&)>& yield) {
    if (embdim < 2) throw ParameterOutOfRangeError("enumerate_semigroups: embdim must be >= 2");
    if (max_generator < 2) return;
    std::vector<std::int64_t> tuple;
    // 1 cannot occur in a minimal generating set of size >= 2.
    std::function<void(std::int64_t)> rec = [&](std::int64_t lo) {
        if (static_cast<int>(tuple.size()) == embdim) {
            std::int64_t g = 0;
            for (std::int64_t x : tuple) g = std::gcd(g, x);
            if (g != 1) return;
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                std::vector<std::int64_t> others;
                for (std::size_t j = 0; j < tuple.size(); ++j)
                    if (j != i) others.push_back(tuple[j]);
                if (monoid_contains(others, tuple[i])) return;
            }
            yield(canonicalize(tuple));
            return;
        }
        std::int64_t remaining = embdim - static_cast<std::int64_t>(tuple.size());
        for (std::int64_t x = lo; x + remaining - 1 <= max_generator; ++x) {
            tuple.push_back(x);
            rec(x + 1);
            tuple.pop_back();
        }
    };
    rec(2);
}

std::vector<NumericalSemigroup> enumerate_semigroups(int embdim, std::int64_t max_generator) {
    std::vector<NumericalSemigroup> out;
    enumerate_semigroups(embdim, max_generator,
                         [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

} // namespace monocurve
