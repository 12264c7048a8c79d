// Acceptance gate: prints one [PASS]/[FAIL] line per criterion and exits with
// the number of failures.  Everything here recomputes its expectations from
// scratch; nothing is read from the unit suite.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "monocurve/survey.hpp"
#include "monocurve/toric.hpp"
#include "test_util.hpp"

using namespace monocurve;

namespace {

int failures = 0;

void outcome(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " C" << id << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

const std::vector<std::pair<int, std::int32_t>> kFamilyGrid = {
    {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};

std::int64_t ipow(std::int64_t b, int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

void monomials_of_degree(int nvars, std::int32_t deg, std::vector<Monomial>& out) {
    Monomial m(nvars);
    std::function<void(int, std::int32_t)> rec = [&](int v, std::int32_t left) {
        if (v == nvars - 1) {
            m.e[v] = left;
            out.push_back(m);
            m.e[v] = 0;
            return;
        }
        for (std::int32_t k = 0; k <= left; ++k) {
            m.e[v] = k;
            rec(v + 1, left - k);
        }
        m.e[v] = 0;
    };
    if (nvars > 0) rec(0, deg);
}

// dim_k (P/J)_e by exact rank of the degree-e slice spanned by {m * g}.
std::int64_t quotient_dim_by_rank(const GradedIdeal& J, std::int32_t e) {
    std::vector<Monomial> mons;
    monomials_of_degree(J.ambient, e, mons);
    std::map<Monomial, std::int32_t> col;
    for (const Monomial& m : mons) col.emplace(m, static_cast<std::int32_t>(col.size()));
    std::vector<std::map<std::int32_t, Rational>> rows;
    for (const Polynomial& g : J.gb) {
        if (g.degree() > e) continue;
        std::vector<Monomial> shifts;
        monomials_of_degree(J.ambient, e - g.degree(), shifts);
        for (const Monomial& m : shifts) {
            std::map<std::int32_t, Rational> row;
            for (const Term& t : g.terms()) row[col.at(t.m * m)] = t.c;
            rows.push_back(std::move(row));
        }
    }
    return static_cast<std::int64_t>(mons.size()) - sparse_rank(std::move(rows));
}

std::int64_t standard_count(const MonomialIdeal& L, std::int32_t e) {
    std::vector<Monomial> mons;
    monomials_of_degree(L.nvars(), e, mons);
    std::int64_t n = 0;
    for (const Monomial& m : mons)
        if (!L.contains(m)) ++n;
    return n;
}

// L == (x1^d, ..., xc^d, x1^{d-1} x2) after some permutation of x1..xc.
bool shape_up_to_permutation(const MonomialIdeal& L, int c, std::int32_t d) {
    int nv = c + 1;
    if (L.nvars() != nv) return false;
    std::vector<Monomial> expected_gens;
    for (int i = 1; i <= c; ++i) expected_gens.push_back(variable(nv, i, d));
    Monomial link(nv);
    link.e[1] = d - 1;
    link.e[2] = 1;
    expected_gens.push_back(link);
    MonomialIdeal expected(nv, expected_gens);

    std::vector<int> perm(c);
    for (int i = 0; i < c; ++i) perm[i] = i + 1;
    do {
        std::vector<Monomial> mapped;
        bool ok = true;
        for (const Monomial& m : L.mingens()) {
            if (m.e[0] != 0) {
                ok = false;
                break;
            }
            Monomial im(nv);
            for (int k = 1; k <= c; ++k) im.e[perm[k - 1]] = m.e[k];
            mapped.push_back(im);
        }
        if (ok && MonomialIdeal(nv, mapped) == expected) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

int main() {
    // Criteria 1, 6 and 9 share one full survey of embdim 3..5, generators <= 20.
    SurveyOptions opt;
    opt.embdim_lo = 3;
    opt.embdim_hi = 5;
    opt.max_generator = 20;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    SurveyCache cache;
    SurveyResult survey = run_survey(opt, cache);

    {
        bool pass = survey.summary.rows > 1000 && survey.summary.violations == 0 &&
                    survey.summary.capped == 0;
        std::ostringstream d;
        d << survey.summary.rows << " semigroups, " << survey.summary.violations
          << " violations, " << survey.summary.capped << " capped";
        outcome(1, "theorem bound holds across embdim 3-5, generators <= 20", pass, d.str());
    }

    {
        AnalysisReport r = verify_theorem(canonicalize({11, 13, 14, 15, 19}));
        bool pass = r.d == 2 && r.c == 4 && r.e == 11 && r.bound == 12 &&
                    r.classification == ConeClass::almost_complete_intersection &&
                    r.theorem_ok && !r.extremal;
        std::ostringstream d;
        d << "d=" << r.d << " c=" << r.c << " e=" << r.e << " bound=" << r.bound << " class="
          << class_label(r.classification) << (r.extremal ? " extremal" : " not extremal");
        outcome(2, "fixture <11,13,14,15,19> matches", pass, d.str());
    }

    {
        bool pass = true;
        std::ostringstream d;
        for (auto [c, dd] : kFamilyGrid) {
            NumericalSemigroup s = extremal_family(c, dd);
            AnalysisReport r = verify_theorem(s);
            GradedIdeal J = tangent_cone(defining_ideal(s));
            bool degrees_ok = true;
            for (std::int32_t deg : J.min_gen_degrees) degrees_ok &= deg <= dd;
            bool here = r.e == bound(c, dd) && r.extremal && degrees_ok &&
                        shape_up_to_permutation(leading_ideal(J), c, dd);
            if (!here) d << " (" << c << "," << dd << ") FAILED";
            pass &= here;
        }
        if (pass) d << "7 instances: e = d^c - (d-1)d^(c-2), degrees <= d, L-shape matches";
        outcome(3, "sharp family attains the bound with the stated leading ideal", pass,
                d.str());
    }

    {
        bool pass = true;
        std::ostringstream d;
        for (auto [c, dd] : kFamilyGrid) {
            GradedIdeal J = tangent_cone(defining_ideal(extremal_family(c, dd)));
            MonomialIdeal L = leading_ideal(J);
            BettiTable got = betti_lcm(L);
            BettiTable expected = extremal_graded_betti(c, dd);
            bool totals_ok = true;
            for (int i = 0; i <= c; ++i)
                totals_ok &= static_cast<std::int64_t>(got.totals.size()) > i &&
                             got.totals[i] == extremal_betti_formula(c, i);
            bool here = totals_ok && got == expected && betti_koszul(L) == got;
            if (!here) d << " (" << c << "," << dd << ") FAILED";
            pass &= here;
        }
        if (pass) d << "totals and graded entries match the formulas; both methods agree";
        outcome(4, "extremal Betti tables equal the closed formulas", pass, d.str());
    }

    {
        bool pass = true;
        std::ostringstream d;
        for (int c = 2; c <= 6 && pass; ++c)
            for (std::int32_t dd = 2; dd <= 6 && pass; ++dd) {
                LemmaResult at = lemma_min_product(c, dd, static_cast<std::int64_t>(c - 1) * dd);
                std::vector<std::int32_t> expected = {1, static_cast<std::int32_t>(dd - 1)};
                for (int k = 0; k < c - 2; ++k) expected.push_back(dd);
                std::sort(expected.begin(), expected.end());
                LemmaResult above =
                    lemma_min_product(c, dd, static_cast<std::int64_t>(c - 1) * dd + 1);
                bool here = at.minimum == (dd - 1) * ipow(dd, c - 2) &&
                            at.argmins == std::vector<std::vector<std::int32_t>>{expected} &&
                            above.minimum >= ipow(dd, c - 1);
                if (!here) {
                    d << "failed at (" << c << "," << dd << ")";
                    pass = false;
                }
            }
        if (pass) d << "all 25 (c,d) pairs, unique argmin {1,d-1,d,...,d}";
        outcome(5, "lemma oracle confirms both closed forms for 2 <= c,d <= 6", pass, d.str());
    }

    {
        std::int64_t checked = 0;
        bool pass = true;
        for (const SurveyRow& row : survey.rows) {
            if (!row.report) continue;
            const AnalysisReport& r = *row.report;
            ++checked;
            if (r.e != row.generators.front() ||
                r.c != static_cast<int>(row.generators.size()) - 1)
                pass = false;
        }
        std::ostringstream d;
        d << "computed e and codim match n0 and embdim-1 on " << checked << " instances";
        outcome(6, "e(G) = n0 and codim = c across the survey", pass, d.str());
    }

    {
        bool pass = true;
        std::int64_t points = 0;
        for (int c = 2; c <= 5 && pass; ++c)
            for (std::int32_t dd = 2; dd <= 4 && pass; ++dd) {
                std::vector<Monomial> pure;
                for (int i = 0; i < c; ++i) pure.push_back(variable(c, i, dd));
                MonomialIdeal powers(c, pure);
                Monomial link(c);
                link.e[0] = dd - 1;
                link.e[1] = 1;
                MonomialIdeal quot = colon(powers, link);

                std::vector<Monomial> want = {variable(c, 0), variable(c, 1, dd - 1)};
                for (int i = 2; i < c; ++i) want.push_back(variable(c, i, dd));
                pass &= quot == MonomialIdeal(c, want);

                // brute divisibility over the full box [0, d+1]^c
                std::vector<std::int32_t> gamma(static_cast<std::size_t>(c), 0);
                for (;;) {
                    Monomial m(c);
                    for (int i = 0; i < c; ++i) m.e[i] = gamma[i];
                    pass &= quot.contains(m) == powers.contains(m * link);
                    ++points;
                    int j = 0;
                    while (j < c && ++gamma[j] > dd + 1) gamma[j++] = 0;
                    if (j == c) break;
                }
            }
        std::ostringstream d;
        d << "identity and " << points << " brute-force membership points";
        outcome(7, "colon linkage (x1^d..xc^d) : x1^(d-1)x2 for c <= 5, d <= 4", pass, d.str());
    }

    {
        std::int32_t got = min_relation_degree_bound(100, 4);
        outcome(8, "multiplicity 100 in codim 4 forces a relation of degree 4", got == 4,
                "min_relation_degree_bound(100, 4) = " + std::to_string(got));
    }

    {
        std::int64_t quadratic = 0;
        bool pass = survey.summary.quadratic_gap_failures == 0;
        for (const SurveyRow& row : survey.rows) {
            if (!row.report || row.report->c < 2 || row.report->d != 2) continue;
            ++quadratic;
            const AnalysisReport& r = *row.report;
            if (!(r.e <= r.bound || r.e == ipow(2, r.c))) pass = false;
        }
        std::ostringstream d;
        d << quadratic << " quadratic instances, e <= 2^c - 2^(c-2) or e = 2^c on each";
        outcome(9, "question 1.11 gap holds for every surveyed quadratic semigroup",
                pass && quadratic > 100, d.str());
    }

    {
        bool pass = true;
        for (int c = 2; c <= 5; ++c)
            pass &= koszul_witness(extremal_family(c, 2)) == KoszulStatus::certified;
        outcome(10, "koszul witness certifies extremal_family(c, 2) for c = 2..5", pass,
                "quadratic leading ideals in all four cases");
    }

    {
        // (a) reduced-GB canonicity under generator shuffles
        std::vector<NumericalSemigroup> pool = enumerate_semigroups(3, 16);
        for (const NumericalSemigroup& s : enumerate_semigroups(4, 14)) pool.push_back(s);
        testutil::Rng rng(2025);
        std::map<std::vector<std::int64_t>, GradedIdeal> base;
        bool canonical = true;
        for (int trial = 0; trial < 100; ++trial) {
            const NumericalSemigroup& s =
                pool[rng.below(static_cast<std::uint64_t>(pool.size()))];
            auto it = base.find(s.generators());
            if (it == base.end())
                it = base.emplace(s.generators(), tangent_cone(defining_ideal(s))).first;
            BinomialIdeal I = defining_ideal(s);
            for (std::size_t i = I.generators.size(); i > 1; --i)
                std::swap(I.generators[i - 1],
                          I.generators[rng.below(static_cast<std::uint64_t>(i))]);
            GradedIdeal shuffled = tangent_cone(I);
            canonical &= shuffled.gb == it->second.gb &&
                         shuffled.min_gen_degrees == it->second.min_gen_degrees;
        }

        // (b) HS(P/J) = HS(P/L) degree by degree up to 30
        bool series = true;
        for (auto gens : std::vector<std::vector<std::int64_t>>{{3, 4, 5}, {4, 5, 6}, {5, 6, 13}}) {
            GradedIdeal J = tangent_cone(defining_ideal(canonicalize(gens)));
            MonomialIdeal L = leading_ideal(J);
            for (std::int32_t e = 0; e <= 30; ++e)
                series &= quotient_dim_by_rank(J, e) == standard_count(L, e);
        }

        // (c) Betti alternating sums vanish and reconstruct the Hilbert numerator
        bool betti_ok = true;
        std::int64_t tables = 0;
        std::vector<MonomialIdeal> ideals;
        for (const NumericalSemigroup& s : enumerate_semigroups(3, 14))
            ideals.push_back(leading_ideal(tangent_cone(defining_ideal(s))));
        for (auto [c, dd] : kFamilyGrid)
            ideals.push_back(leading_ideal(tangent_cone(defining_ideal(extremal_family(c, dd)))));
        for (const MonomialIdeal& L : ideals) {
            if (L.mingens().size() > 12) continue;
            ++tables;
            BettiTable t = betti_lcm(L);
            std::int64_t alt = 0;
            IntPoly recon;
            for (const auto& [key, beta] : t.graded) {
                std::int64_t sign = key.first % 2 ? -1 : 1;
                if (static_cast<std::int32_t>(recon.size()) <= key.second)
                    recon.resize(static_cast<std::size_t>(key.second) + 1, 0);
                recon[static_cast<std::size_t>(key.second)] += sign * beta;
            }
            for (std::size_t i = 0; i < t.totals.size(); ++i)
                alt += (i % 2 ? -t.totals[i] : t.totals[i]);
            ipoly_trim(recon);
            betti_ok &= alt == 0 && recon == hilbert(L).numerator;
        }

        bool pass = canonical && series && betti_ok;
        std::ostringstream d;
        d << "100 shuffle trials" << (canonical ? " canonical" : " NOT canonical")
          << "; Hilbert series equal to degree 30 on 3 instances"
          << (series ? "" : " FAILED") << "; " << tables
          << " Betti tables with zero alternating sums and exact N(t) reconstruction"
          << (betti_ok ? "" : " FAILED");
        outcome(11, "engine properties: canonical GB, series agreement, Betti identities",
                pass, d.str());
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all 11 criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures;
}
