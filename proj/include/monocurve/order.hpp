#ifndef MONOCURVE_ORDER_HPP
#define MONOCURVE_ORDER_HPP

#include <cstdint>
#include <vector>

#include "monocurve/monomial.hpp"

namespace monocurve {

enum class OrderKind { Lex, DegRevLex, WeightedDegRevLex, ElimBlock };

// A global monomial order.  `priority` lists variable indices from most to
// least significant; revlex tie-breaking scans that list from the back, and
// the variable with the smaller exponent at the first difference wins.
class MonomialOrder {
  public:
    // lex; priority lists variables most significant first and defaults to
    // x0 > x1 > ... > x{n-1}.
    static MonomialOrder lex(int nvars, const std::vector<int>& priority = {});
    // degrevlex with x{n-1} > ... > x0.  This is the order used everywhere
    // for tangent cones: on x0..xc it makes LM(xi^d - x0^a ...) = xi^d.
    static MonomialOrder degrevlex(int nvars);
    // degrevlex as above, but the listed variables are moved to the very
    // bottom of the priority list (in the given order), e.g. for saturation
    // orders where the homogenizing variable must be least.
    static MonomialOrder degrevlex_with_least(int nvars, const std::vector<int>& least);
    // First key: weighted degree (all weights > 0); tie: revlex scan with the
    // `least` variables scanned first.
    static MonomialOrder weighted_degrevlex(std::vector<std::int64_t> weights,
                                            const std::vector<int>& least = {});
    // Elimination order for the block: first key is total degree in the block
    // variables, then degrevlex on everything.  Monomials free of the block
    // are smaller than any monomial meeting it.
    static MonomialOrder elim_block(int nvars, const std::vector<int>& block);

    int nvars() const { return nvars_; }
    OrderKind kind() const { return kind_; }
    // Nonempty only for WeightedDegRevLex.
    const std::vector<std::int64_t>& weights() const { return weights_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  private:
    MonomialOrder(OrderKind kind, int nvars) : kind_(kind), nvars_(nvars) {}
    OrderKind kind_;
    int nvars_;
    std::vector<int> priority_;          // most significant first
    std::vector<std::int64_t> weights_;  // WeightedDegRevLex only
    std::vector<char> in_block_;         // ElimBlock only

    int revlex_scan(const Monomial& a, const Monomial& b) const;
};

} // namespace monocurve

#endif
