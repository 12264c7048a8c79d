#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monocurve/survey.hpp"
#include "monocurve/toric.hpp"

namespace py = pybind11;
using namespace monocurve;

namespace {

EffortCaps make_caps(std::int64_t max_pairs, std::int32_t max_degree) {
    EffortCaps caps;
    caps.max_pairs = max_pairs;
    caps.max_degree = max_degree;
    return caps;
}

py::dict report_to_dict(const AnalysisReport& r) {
    py::dict d;
    d["generators"] = r.semigroup.generators();
    d["c"] = r.c;
    d["d"] = r.d;
    d["e"] = r.e;
    if (r.c >= 2)
        d["bound"] = r.bound;
    else
        d["bound"] = py::none();
    d["class"] = class_label(r.classification);
    d["cm"] = r.cohen_macaulay;
    d["theorem_ok"] = r.theorem_ok;
    d["extremal"] = r.extremal;
    d["koszul"] = to_string(r.koszul);
    if (!r.betti_totals.empty()) d["betti_totals"] = r.betti_totals;
    return d;
}

py::dict betti_to_dict(const BettiTable& t) {
    py::dict graded;
    for (const auto& [key, beta] : t.graded)
        graded[py::make_tuple(key.first, key.second)] = beta;
    py::dict d;
    d["totals"] = t.totals;
    d["graded"] = graded;
    return d;
}

MonomialIdeal parse_ideal(const std::vector<std::string>& monomials, int nvars) {
    std::vector<Monomial> gens;
    gens.reserve(monomials.size());
    for (const std::string& text : monomials) gens.push_back(parse_monomial(text, nvars));
    return MonomialIdeal(nvars, gens);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tangent cones of numerical-semigroup curve singularities: multiplicity "
              "bound verification, the sharp extremal family, and its homological "
              "consequences.";

    py::register_exception<EffortCapExceeded>(m, "EffortCapExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& ex) {
            PyErr_SetString(PyExc_ValueError, ex.what());
        }
    });

    m.def(
        "canonicalize",
        [](const std::vector<std::int64_t>& raw) { return canonicalize(raw).generators(); },
        py::arg("generators"),
        "Minimal generating set of the numerical semigroup generated by `generators`.");

    m.def(
        "contains",
        [](const std::vector<std::int64_t>& raw, std::int64_t n) {
            return canonicalize(raw).contains(n);
        },
        py::arg("generators"), py::arg("n"));

    m.def(
        "frobenius",
        [](const std::vector<std::int64_t>& raw) { return canonicalize(raw).frobenius(); },
        py::arg("generators"), "Largest integer outside the semigroup.");

    m.def(
        "apery_set",
        [](const std::vector<std::int64_t>& raw, std::int64_t mod) {
            NumericalSemigroup s = canonicalize(raw);
            return apery_set(s, mod == 0 ? s.multiplicity() : mod);
        },
        py::arg("generators"), py::arg("mod") = 0,
        "Least semigroup element in each residue class (default modulus: the multiplicity).");

    m.def(
        "enumerate_semigroups",
        [](int embdim, std::int64_t max_generator) {
            std::vector<std::vector<std::int64_t>> out;
            enumerate_semigroups(embdim, max_generator,
                                 [&out](const NumericalSemigroup& s) {
                                     out.push_back(s.generators());
                                 });
            return out;
        },
        py::arg("embdim"), py::arg("max_generator"));

    m.def(
        "defining_ideal",
        [](const std::vector<std::int64_t>& raw, std::int64_t max_pairs,
           std::int32_t max_degree) {
            BinomialIdeal I = defining_ideal(canonicalize(raw), make_caps(max_pairs, max_degree));
            std::vector<std::string> out;
            out.reserve(I.generators.size());
            for (const Polynomial& f : I.generators) out.push_back(to_string(f));
            return out;
        },
        py::arg("generators"), py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree,
        "Binomial generators of the toric ideal of the monomial curve.");

    m.def(
        "tangent_cone",
        [](const std::vector<std::int64_t>& raw, std::int64_t max_pairs,
           std::int32_t max_degree) {
            EffortCaps caps = make_caps(max_pairs, max_degree);
            GradedIdeal J = tangent_cone(defining_ideal(canonicalize(raw), caps), caps);
            std::vector<std::string> gens, gb;
            for (const Polynomial& f : J.generators) gens.push_back(to_string(f));
            for (const Polynomial& f : J.gb) gb.push_back(to_string(f));
            py::dict d;
            d["generators"] = gens;
            d["groebner_basis"] = gb;
            d["min_gen_degrees"] = J.min_gen_degrees;
            return d;
        },
        py::arg("generators"), py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree,
        "Defining ideal of the tangent cone with its reduced Groebner basis.");

    m.def(
        "analyze",
        [](const std::vector<std::int64_t>& raw, bool with_betti, std::int64_t max_pairs,
           std::int32_t max_degree) {
            return report_to_dict(
                verify_theorem(canonicalize(raw), make_caps(max_pairs, max_degree), with_betti));
        },
        py::arg("generators"), py::arg("with_betti") = false,
        py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree,
        "Full report: multiplicity, bound, classification, CM, Koszul witness.");

    m.def(
        "check_consequences",
        [](const std::vector<std::int64_t>& raw, std::int64_t max_pairs,
           std::int32_t max_degree) {
            ConsequenceChecks k =
                check_extremal_consequences(canonicalize(raw), make_caps(max_pairs, max_degree));
            py::dict d;
            d["leading_ideal_shape"] = k.leading_ideal_shape;
            d["aci_and_cm"] = k.aci_and_cm;
            d["betti_totals_match"] = k.betti_totals_match;
            d["betti_graded_match"] = k.betti_graded_match;
            d["colon_linkage"] = k.colon_linkage;
            d["all_pass"] = k.all_pass();
            return d;
        },
        py::arg("generators"), py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree,
        "The five structural consequences of extremality (extremal instances only).");

    m.def("bound", &bound, py::arg("c"), py::arg("d"),
          "d^c - (d-1) d^(c-2), the multiplicity bound.");

    m.def(
        "lemma_min_product",
        [](int c, std::int32_t d, std::int64_t target_sum) {
            LemmaResult r = lemma_min_product(c, d, target_sum);
            return py::make_tuple(r.minimum, r.argmins);
        },
        py::arg("c"), py::arg("d"), py::arg("target_sum"),
        "Minimum product over multisets in [1,d]^c with the given sum, with all argmins.");

    m.def(
        "extremal_family",
        [](int c, std::int32_t d) { return extremal_family(c, d).generators(); }, py::arg("c"),
        py::arg("d"), "The sharp-family member attaining the bound.");

    m.def("extremal_betti_formula", &extremal_betti_formula, py::arg("c"), py::arg("i"));

    m.def(
        "betti",
        [](const std::vector<std::string>& monomials, int nvars) {
            MonomialIdeal L = parse_ideal(monomials, nvars);
            BettiTable table = betti_lcm(L);
            if (!(betti_koszul(L) == table))
                throw Error("betti_lcm and betti_koszul disagree");
            return betti_to_dict(table);
        },
        py::arg("monomials"), py::arg("nvars"),
        "Graded Betti table of P/L for a monomial ideal L, cross-checked by two methods.");

    m.def("min_relation_degree_bound", &min_relation_degree_bound, py::arg("n0"), py::arg("c"),
          "Least degree d a tangent cone of this multiplicity and codimension allows.");

    m.def(
        "quadratic_gap_check",
        [](const std::vector<std::int64_t>& raw, std::int64_t max_pairs,
           std::int32_t max_degree) {
            return quadratic_gap_check(canonicalize(raw), make_caps(max_pairs, max_degree));
        },
        py::arg("generators"), py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree);

    m.def(
        "survey",
        [](int embdim_lo, int embdim_hi, std::int64_t max_generator, int jobs,
           std::int64_t max_pairs, std::int32_t max_degree) {
            SurveyOptions opt;
            opt.embdim_lo = embdim_lo;
            opt.embdim_hi = embdim_hi;
            opt.max_generator = max_generator;
            opt.jobs = jobs;
            opt.caps = make_caps(max_pairs, max_degree);
            SurveyCache cache;
            SurveyResult res = run_survey(opt, cache);
            py::list rows;
            for (const SurveyRow& row : res.rows) {
                py::dict d;
                d["generators"] = row.generators;
                d["report"] = row.report ? py::object(report_to_dict(*row.report))
                                         : py::object(py::none());
                d["elapsed_ms"] = row.elapsed_ms;
                rows.append(d);
            }
            py::dict summary;
            summary["rows"] = res.summary.rows;
            summary["capped"] = res.summary.capped;
            summary["violations"] = res.summary.violations;
            summary["extremal_found"] = res.summary.extremal_found;
            summary["quadratic"] = res.summary.quadratic;
            summary["quadratic_gap_failures"] = res.summary.quadratic_gap_failures;
            py::dict out;
            out["rows"] = rows;
            out["summary"] = summary;
            return out;
        },
        py::arg("embdim_lo"), py::arg("embdim_hi"), py::arg("max_generator"),
        py::arg("jobs") = 1, py::arg("max_pairs") = EffortCaps{}.max_pairs,
        py::arg("max_degree") = EffortCaps{}.max_degree,
        "Analyze every semigroup in range; returns rows and summary counts.");
}
