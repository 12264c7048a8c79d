#ifndef MONOCURVE_MONOMIDEAL_HPP
#define MONOCURVE_MONOMIDEAL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monocurve/polynomial.hpp"

namespace monocurve {

// Integer polynomial in one variable t; coefficient of t^k at index k.
using IntPoly = std::vector<std::int64_t>;

void ipoly_trim(IntPoly& p);
IntPoly ipoly_add(const IntPoly& a, const IntPoly& b);
// a + t^k * b
IntPoly ipoly_shift_add(const IntPoly& a, const IntPoly& b, std::int32_t k);
IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
std::int64_t ipoly_eval1(const IntPoly& p);
// q with (1-t)*q = p; requires p(1) = 0
IntPoly ipoly_divide_by_one_minus_t(const IntPoly& p);
std::string ipoly_to_string(const IntPoly& p);

// A monomial ideal given by its unique minimal generators, kept canonically
// sorted (degree, then the ambient degrevlex).
class MonomialIdeal {
  public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& mingens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_proper() const;
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// L + (extra), minimalized.
MonomialIdeal monomial_sum(const MonomialIdeal& L, const std::vector<Monomial>& extra);

struct HilbertData {
    IntPoly numerator;       // N(t): HS(P/L) = N / (1-t)^nvars
    IntPoly reduced;         // Q(t) = N / (1-t)^(nvars-dim), Q(1) != 0
    int dim = 0;             // Krull dimension of P/L
    std::int64_t multiplicity = 0; // Q(1)
};

// Pivot recursion N(L) = N(L + (p)) + t^deg(p) * N(L : p) with memoization;
// L must be proper.
HilbertData hilbert(const MonomialIdeal& L);

// Lattice-point count Card{gamma : mu_j <= gamma_j < d} = prod(d - mu_j) for
// the exponent vector mu of m; the closed formula and a brute-force count are
// both evaluated and must agree.
std::int64_t box_count(const Monomial& m, std::int32_t d);

// Minimal generators of L : m, via {g / gcd(g, m)}.
MonomialIdeal colon(const MonomialIdeal& L, const Monomial& m);

// Graded Betti numbers of P/L over the ambient polynomial ring.
struct BettiTable {
    std::map<std::pair<int, std::int32_t>, std::int64_t> graded; // (i, j) -> beta_{i,j}
    std::vector<std::int64_t> totals;                            // beta_i

    std::int64_t at(int i, std::int32_t j) const {
        auto it = graded.find({i, j});
        return it == graded.end() ? 0 : it->second;
    }
    bool operator==(const BettiTable& o) const {
        return graded == o.graded && totals == o.totals;
    }
};

// Betti numbers from the multigraded strands of the Taylor complex of the
// lcm lattice; exact over the rationals.  Throws EffortCapExceeded when L has
// more than max_gens minimal generators.
BettiTable betti_lcm(const MonomialIdeal& L, int max_gens = 12);

// Independent oracle: beta_{i,j} = dim H_i(Koszul(x_0..x_n) tensor P/L)_j by
// exact linear algebra degree by degree.  max_degree < 0 uses the Taylor
// bound deg lcm(all generators).
BettiTable betti_koszul(const MonomialIdeal& L, std::int32_t max_degree = -1);

// Rank of a sparse matrix over the rationals (rows of column -> entry maps).
std::int64_t sparse_rank(std::vector<std::map<std::int32_t, Rational>> rows);

} // namespace monocurve

#endif
