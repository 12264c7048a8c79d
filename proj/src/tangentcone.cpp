#include "monocurve/tangentcone.hpp"

#include <algorithm>
#include <set>

#include "monocurve/ideal_ops.hpp"

namespace monocurve {

std::string to_string(ConeClass cls) {
    switch (cls) {
    case ConeClass::complete_intersection: return "complete_intersection";
    case ConeClass::almost_complete_intersection: return "almost_complete_intersection";
    default: return "other";
    }
}

GradedIdeal make_graded_ideal(int ambient, std::vector<Polynomial> generators,
                              const EffortCaps& caps) {
    std::vector<Polynomial> kept;
    for (const Polynomial& g : generators) {
        if (g.is_zero()) continue;
        if (g.nvars() != ambient)
            throw DimensionMismatchError("generator outside ambient ring");
        if (!g.is_homogeneous())
            throw InputError("graded ideal generators must be homogeneous");
        kept.push_back(g);
    }
    GradedIdeal J;
    J.ambient = ambient;
    J.generators = std::move(kept);
    J.gb = buchberger(J.generators, MonomialOrder::degrevlex(ambient), caps);
    J.min_gen_degrees = minimal_generator_degrees(J);
    return J;
}

namespace {

void append_monomials_of_degree(int nvars, std::int32_t deg, std::vector<Monomial>& out) {
    Monomial cur(nvars);
    auto rec = [&](auto&& self, int v, std::int32_t left) -> void {
        if (v == nvars - 1) {
            cur.e[static_cast<std::size_t>(v)] = left;
            out.push_back(cur);
            cur.e[static_cast<std::size_t>(v)] = 0;
            return;
        }
        for (std::int32_t a = 0; a <= left; ++a) {
            cur.e[static_cast<std::size_t>(v)] = a;
            self(self, v + 1, left - a);
        }
        cur.e[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, deg);
}

} // namespace

std::vector<std::int32_t> minimal_generator_degrees(const GradedIdeal& J) {
    if (J.gb.empty()) return {};
    MonomialIdeal L = leading_ideal(J);
    // new minimal generators can only appear in degrees where the basis has
    // an element, since J_e = ((x)J)_e + span{g in gb : deg g = e}
    std::set<std::int32_t> degrees;
    for (const Polynomial& g : J.gb) degrees.insert(g.degree());

    std::vector<std::int32_t> out;
    for (std::int32_t e : degrees) {
        std::vector<Monomial> mons;
        append_monomials_of_degree(J.ambient, e, mons);
        std::map<Monomial, std::int32_t> col;
        std::int64_t dim_j = 0;
        for (const Monomial& m : mons) {
            col.emplace(m, static_cast<std::int32_t>(col.size()));
            if (L.contains(m)) ++dim_j;
        }
        // rank of ((x)J)_e from the spanning set {m*g : deg m >= 1}
        std::vector<std::map<std::int32_t, Rational>> rows;
        for (const Polynomial& g : J.gb) {
            if (g.degree() >= e) continue;
            std::vector<Monomial> shifts;
            append_monomials_of_degree(J.ambient, e - g.degree(), shifts);
            for (const Monomial& m : shifts) {
                std::map<std::int32_t, Rational> row;
                for (const Term& t : g.terms()) row[col.at(t.m * m)] = t.c;
                rows.push_back(std::move(row));
            }
        }
        std::int64_t mu = dim_j - sparse_rank(std::move(rows));
        for (std::int64_t k = 0; k < mu; ++k) out.push_back(e);
    }
    return out;
}

MonomialIdeal leading_ideal(const GradedIdeal& J) {
    MonomialOrder o = MonomialOrder::degrevlex(J.ambient);
    std::vector<Monomial> lms;
    lms.reserve(J.gb.size());
    for (const Polynomial& g : J.gb) lms.push_back(g.leading_term(o).m);
    return MonomialIdeal(J.ambient, std::move(lms));
}

GradedIdeal tangent_cone(const BinomialIdeal& I, const EffortCaps& caps) {
    const auto& n = I.semigroup.generators();
    int nv = static_cast<int>(n.size());
    if (I.generators.empty()) {
        GradedIdeal trivial;
        trivial.ambient = nv;
        return trivial;
    }

    // weight-homogenize: u^delta on the higher-degree monomial, so the
    // initial form is the u = 0 fiber of the saturated family
    int u = nv;
    std::vector<Polynomial> fam;
    fam.reserve(I.generators.size());
    for (const Polynomial& f : I.generators) {
        if (f.num_terms() != 2) throw InputError("curve ideal generator is not a binomial");
        std::vector<Term> lifted;
        for (const Term& t : f.terms()) {
            Monomial m(nv + 1);
            std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
            lifted.push_back(Term{std::move(m), t.c});
        }
        std::int32_t d1 = lifted[0].m.degree();
        std::int32_t d2 = lifted[1].m.degree();
        if (d1 > d2)
            lifted[0].m.e[static_cast<std::size_t>(u)] = d1 - d2;
        else if (d2 > d1)
            lifted[1].m.e[static_cast<std::size_t>(u)] = d2 - d1;
        fam.push_back(Polynomial(nv + 1, std::move(lifted)));
    }

    // x_j weighs n_j - 1 and u weighs 1: each lifted binomial is homogeneous
    std::vector<std::int64_t> w;
    for (std::int64_t nj : n) {
        if (nj < 2) throw InputError("tangent cone needs every generator >= 2");
        w.push_back(nj - 1);
    }
    w.push_back(1);
    std::vector<Polynomial> sat = saturate_by_variable(fam, u, w, caps);

    std::vector<Polynomial> initial_forms;
    std::vector<int> keep(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) keep[static_cast<std::size_t>(i)] = i;
    for (const Polynomial& g : sat) {
        Polynomial fiber = set_var_zero(g, u);
        if (!fiber.is_zero()) initial_forms.push_back(restrict_vars(fiber, keep));
    }

    GradedIdeal J = make_graded_ideal(nv, std::move(initial_forms), caps);
    GradedInvariants inv = graded_invariants(J);
    if (inv.dim != 1 || inv.multiplicity != n.front())
        throw Error("tangent cone check failed: dim " + std::to_string(inv.dim) +
                    ", e " + std::to_string(inv.multiplicity) + ", expected 1 and " +
                    std::to_string(n.front()));
    return J;
}

GradedInvariants graded_invariants(const GradedIdeal& J) {
    if (J.gb.empty()) throw InputError("invariants of the zero ideal");
    HilbertData h = hilbert(leading_ideal(J));
    GradedInvariants inv;
    inv.dim = h.dim;
    inv.codim = J.ambient - h.dim;
    inv.multiplicity = h.multiplicity;
    inv.hilbert_numerator = h.numerator;
    inv.num_min_gens = static_cast<int>(J.min_gen_degrees.size());
    inv.max_gen_degree = J.min_gen_degrees.empty() ? 0 : J.min_gen_degrees.back();
    return inv;
}

ConeClass classify(const GradedIdeal& J) {
    GradedInvariants inv = graded_invariants(J);
    if (inv.num_min_gens == inv.codim) return ConeClass::complete_intersection;
    if (inv.num_min_gens == inv.codim + 1) return ConeClass::almost_complete_intersection;
    return ConeClass::other;
}

bool is_cohen_macaulay(const GradedIdeal& J, const EffortCaps& caps) {
    Polynomial x0 = Polynomial::monomial(variable(J.ambient, 0));
    std::vector<Polynomial> q = quotient_by_element(J.gb, x0, caps);
    return ideal_equal(q, J.gb, caps);
}

} // namespace monocurve
