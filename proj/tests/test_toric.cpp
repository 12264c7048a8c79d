#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "monocurve/toric.hpp"
#include "test_util.hpp"

using namespace monocurve;

namespace {

Polynomial P(const std::string& s, int nx) { return parse_polynomial(s, nx); }

NumericalSemigroup SG(std::vector<std::int64_t> gens) { return canonicalize(std::move(gens)); }

// Independent oracle: substitute x_j -> t^{n_j} and collect coefficients by
// exponent of t.
bool vanishes_on_curve(const NumericalSemigroup& S, const Polynomial& f) {
    std::map<std::int64_t, Rational> series;
    for (const Term& t : f.terms()) {
        std::int64_t e = 0;
        for (std::size_t j = 0; j < t.m.e.size(); ++j) e += S.generators()[j] * t.m.e[j];
        series[e] += t.c;
    }
    for (const auto& [e, c] : series)
        if (c != 0) return false;
    return true;
}

// Brute-force reference for critical_degree: enumerate all representations
// of delta*n_i by plain recursion, no DP sharing with the implementation.
bool has_witness_at(const NumericalSemigroup& S, int i, std::int32_t delta) {
    const auto& gens = S.generators();
    int c = S.codim();
    std::vector<std::int32_t> alpha(static_cast<std::size_t>(c) + 1, 0);
    bool found = false;
    auto rec = [&](auto&& self, int j, std::int64_t rem, std::int64_t total) -> void {
        if (found) return;
        if (j == c + 1) {
            if (rem != 0 || total < delta) return;
            std::vector<std::int32_t> pure(static_cast<std::size_t>(c) + 1, 0);
            pure[static_cast<std::size_t>(i)] = delta;
            if (alpha != pure) found = true;
            return;
        }
        for (std::int64_t a = 0; a * gens[static_cast<std::size_t>(j)] <= rem; ++a) {
            alpha[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(a);
            self(self, j + 1, rem - a * gens[static_cast<std::size_t>(j)], total + a);
        }
        alpha[static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, 0, static_cast<std::int64_t>(delta) * gens[static_cast<std::size_t>(i)], 0);
    return found;
}

} // namespace

TEST_CASE("defining_ideal: pinned curves") {
    // plane cusp
    {
        BinomialIdeal I = defining_ideal(SG({2, 3}));
        REQUIRE(I.generators.size() == 1);
        CHECK(ideal_equal(I.generators, {P("x1^2 - x0^3", 2)}));
    }
    // <3,4,5>: two-way membership against the known presentation
    {
        BinomialIdeal I = defining_ideal(SG({3, 4, 5}));
        std::vector<Polynomial> expect{P("x1*x2 - x0^3", 3), P("x1^2 - x0*x2", 3),
                                       P("x2^2 - x0^2*x1", 3)};
        CHECK(ideal_equal(I.generators, expect));
        MonomialOrder o = MonomialOrder::degrevlex(3);
        std::vector<Polynomial> gb1 = buchberger(I.generators, o);
        std::vector<Polynomial> gb2 = buchberger(expect, o);
        for (const Polynomial& g : expect) CHECK(ideal_contains(gb1, o, g));
        for (const Polynomial& g : I.generators) CHECK(ideal_contains(gb2, o, g));
    }
    // <6,7,8,9> contains the four quadratic-family relations
    {
        BinomialIdeal I = defining_ideal(SG({6, 7, 8, 9}));
        MonomialOrder o = MonomialOrder::degrevlex(4);
        std::vector<Polynomial> gb = buchberger(I.generators, o);
        for (const char* s : {"x1*x2 - x0*x3", "x1^2 - x0*x2", "x2^2 - x1*x3", "x3^2 - x0^3"})
            CHECK(ideal_contains(gb, o, P(s, 4)));
    }
    CHECK_THROWS_AS(defining_ideal(SG({1})), ParameterOutOfRangeError);
}

TEST_CASE("defining_ideal: generators vanish on the curve") {
    std::vector<std::vector<std::int64_t>> cases{{2, 3},  {3, 4, 5},    {6, 7, 8, 9},
                                                 {5, 7},  {4, 6, 7},    {7, 8, 10},
                                                 {5, 6, 13}, {4, 5, 6}, {10, 11, 12, 13}};
    for (const auto& gens : cases) {
        NumericalSemigroup S = SG(gens);
        BinomialIdeal I = defining_ideal(S);
        CHECK(!I.generators.empty());
        for (const Polynomial& g : I.generators) {
            CHECK(g.num_terms() == 2);
            CHECK(g.terms()[0].c * g.terms()[1].c == -1);
            CHECK(vanishes_on_curve(S, g));
        }
    }
}

TEST_CASE("defining_ideal: membership matches semigroup arithmetic") {
    // x^a - x^b lies in I iff the weights agree; sample random balanced and
    // unbalanced pairs against the GB.
    NumericalSemigroup S = SG({3, 4, 5});
    BinomialIdeal I = defining_ideal(S);
    MonomialOrder o = MonomialOrder::degrevlex(3);
    std::vector<Polynomial> gb = buchberger(I.generators, o);
    testutil::Rng rng(0x5eed0201u);
    int balanced_seen = 0;
    for (int t = 0; t < 400; ++t) {
        Monomial a(3), b(3);
        for (int v = 0; v < 3; ++v) {
            a.e[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(rng.below(5));
            b.e[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(rng.below(5));
        }
        if (a == b) continue;
        Polynomial f = Polynomial::monomial(a) - Polynomial::monomial(b);
        std::int64_t wa = 3 * a.e[0] + 4 * a.e[1] + 5 * a.e[2];
        std::int64_t wb = 3 * b.e[0] + 4 * b.e[1] + 5 * b.e[2];
        if (wa == wb) ++balanced_seen;
        CHECK(ideal_contains(gb, o, f) == (wa == wb));
    }
    CHECK(balanced_seen > 5);
}

TEST_CASE("critical_degree: pinned values and oracle") {
    CHECK(critical_degree(SG({3, 4, 5}), 1) == 2);
    CHECK(critical_degree(SG({3, 4, 5}), 2) == 2);
    CHECK(critical_degree(SG({2, 3}), 1) == 2);
    CHECK_THROWS_AS(critical_degree(SG({3, 4, 5}), 0), ParameterOutOfRangeError);
    CHECK_THROWS_AS(critical_degree(SG({3, 4, 5}), 3), ParameterOutOfRangeError);

    std::vector<std::vector<std::int64_t>> cases{{2, 3},   {3, 4, 5},  {6, 7, 8, 9}, {5, 7},
                                                 {4, 6, 7}, {7, 8, 10}, {5, 6, 13},  {4, 5, 6},
                                                 {10, 11, 12, 13}, {11, 13, 14, 15, 19}};
    for (const auto& gens : cases) {
        NumericalSemigroup S = SG(gens);
        for (int i = 1; i <= S.codim(); ++i) {
            std::int32_t d = critical_degree(S, i);
            CHECK(d >= 1);
            CHECK(d <= S.multiplicity());
            // brute-force minimality: a witness exists at d and nowhere below
            CHECK(has_witness_at(S, i, d));
            for (std::int32_t lo = 1; lo < d; ++lo) CHECK_FALSE(has_witness_at(S, i, lo));
        }
    }
}

TEST_CASE("power_witness: pinned values") {
    CHECK(power_witness(SG({3, 4, 5}), 1, 2) == P("x1^2 - x0*x2", 3));
    CHECK(power_witness(SG({3, 4, 5}), 2, 2) == P("x2^2 - x0^2*x1", 3));
    CHECK(power_witness(SG({6, 7, 8, 9}), 3, 2) == P("x3^2 - x0^3", 4));
    // tie among max-total representations: 18 = 6*3 = 5+6+7 = 5+5+8, the
    // lexicographically least exponent vector wins
    CHECK(power_witness(SG({5, 6, 7, 8, 9}), 4, 2) == P("x4^2 - x1^3", 5));
    CHECK_THROWS_AS(power_witness(SG({3, 4, 5}), 1, 1), DegreeTooSmallError);
    CHECK_THROWS_AS(power_witness(SG({3, 4, 5}), 0, 2), ParameterOutOfRangeError);
}

TEST_CASE("power_witness: lands in the ideal with enough total degree") {
    std::vector<std::vector<std::int64_t>> cases{{3, 4, 5}, {6, 7, 8, 9}, {7, 8, 10}, {5, 6, 13}};
    for (const auto& gens : cases) {
        NumericalSemigroup S = SG(gens);
        BinomialIdeal I = defining_ideal(S);
        MonomialOrder o = MonomialOrder::degrevlex(S.codim() + 1);
        std::vector<Polynomial> gb = buchberger(I.generators, o);
        for (int i = 1; i <= S.codim(); ++i) {
            std::int32_t d0 = critical_degree(S, i);
            for (std::int32_t d = d0; d < d0 + 3; ++d) {
                Polynomial w = power_witness(S, i, d);
                REQUIRE(w.num_terms() == 2);
                CHECK(vanishes_on_curve(S, w));
                CHECK(ideal_contains(gb, o, w));
                // shape x_i^d - monomial with total degree >= d
                const Term& pure = w.terms()[0].c == 1 ? w.terms()[0] : w.terms()[1];
                const Term& rest = w.terms()[0].c == 1 ? w.terms()[1] : w.terms()[0];
                bool shape_found = false;
                for (const Term& t : w.terms())
                    if (t.m == variable(S.codim() + 1, i, d)) shape_found = true;
                CHECK(shape_found);
                CHECK(pure.m.degree() + rest.m.degree() >= 2 * d);
            }
        }
    }
}
