#ifndef MONOCURVE_TEST_UTIL_HPP
#define MONOCURVE_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

// Brute-force oracles used to derive expected values independently of the
// library code under test, plus a tiny deterministic RNG for property tests.

namespace testutil {

// Splitmix64: deterministic across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

// Membership table for the monoid generated by gens, up to bound inclusive.
inline std::vector<char> reachable_table(const std::vector<std::int64_t>& gens,
                                         std::int64_t bound) {
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= bound; ++v)
        for (std::int64_t g : gens)
            if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return reach;
}

inline bool brute_contains(const std::vector<std::int64_t>& gens, std::int64_t n) {
    if (n < 0) return false;
    return reachable_table(gens, n)[static_cast<std::size_t>(n)] != 0;
}

// Least element of <gens> in each residue class mod m, by linear scan.
inline std::vector<std::int64_t> brute_apery(const std::vector<std::int64_t>& gens,
                                             std::int64_t m) {
    // Everything >= m * max(gens) is reachable in each class; scan far enough.
    std::int64_t bound = m * gens.back() + m;
    auto reach = reachable_table(gens, bound);
    std::vector<std::int64_t> ap(static_cast<std::size_t>(m), -1);
    for (std::int64_t v = 0; v <= bound; ++v)
        if (reach[static_cast<std::size_t>(v)] && ap[static_cast<std::size_t>(v % m)] < 0)
            ap[static_cast<std::size_t>(v % m)] = v;
    return ap;
}

} // namespace testutil

#endif
