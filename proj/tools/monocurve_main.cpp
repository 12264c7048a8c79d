// Command-line surface: analyze, survey, family, lemma, betti.
//
// Exit codes: 0 success, 1 theorem violation or failed check, 2 input error,
// 3 effort cap exceeded, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "monocurve/survey.hpp"
#include "monocurve/toric.hpp"

using namespace monocurve;
using nlohmann::json;

namespace {

struct CliError {
    int code;
    std::string message;
};

int cmd_analyze(const std::string& text, const EffortCaps& caps, bool as_json, bool with_betti,
                bool with_consequences) {
    NumericalSemigroup s = canonicalize(parse_generators(text));
    AnalysisReport r = verify_theorem(s, caps, with_betti);
    ConsequenceChecks checks;
    if (with_consequences) checks = check_extremal_consequences(s, caps);

    if (as_json) {
        json j = json::parse(report_json(r));
        if (with_consequences) j["consequences"] = json::parse(consequences_json(checks));
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << report_text(r);
        if (with_consequences) {
            std::cout << "consequences      " << (checks.all_pass() ? "all pass" : "FAILED")
                      << '\n'
                      << "  leading_ideal_shape " << (checks.leading_ideal_shape ? "pass" : "FAIL")
                      << '\n'
                      << "  aci_and_cm          " << (checks.aci_and_cm ? "pass" : "FAIL") << '\n'
                      << "  betti_totals_match  " << (checks.betti_totals_match ? "pass" : "FAIL")
                      << '\n'
                      << "  betti_graded_match  " << (checks.betti_graded_match ? "pass" : "FAIL")
                      << '\n'
                      << "  colon_linkage       " << (checks.colon_linkage ? "pass" : "FAIL")
                      << '\n';
        }
    }
    if (!r.theorem_ok) return 1;
    if (with_consequences && !checks.all_pass()) return 1;
    return 0;
}

std::pair<int, int> parse_embdim_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad embdim range '" + text + "' (want A or A..B)");
    }
}

int cmd_survey(const std::string& embdim, std::int64_t max_gen, const std::string& out_path,
               const std::string& cache_path, int jobs, const EffortCaps& caps) {
    SurveyOptions opt;
    std::tie(opt.embdim_lo, opt.embdim_hi) = parse_embdim_range(embdim);
    opt.max_generator = max_gen;
    opt.jobs = jobs;
    opt.caps = caps;

    SurveyCache cache;
    std::ofstream cache_out;
    std::function<void(const SurveyRow&)> on_fresh;
    if (!cache_path.empty()) {
        cache = load_cache(cache_path);
        cache_out.open(cache_path, std::ios::app);
        if (!cache_out) throw InputError("cannot open cache file '" + cache_path + "'");
        on_fresh = [&cache_out](const SurveyRow& row) {
            cache_out << cache_line(row) << '\n';
            cache_out.flush();
        };
    }

    SurveyResult res = run_survey(opt, cache, on_fresh);

    std::ofstream file_out;
    bool to_file = !out_path.empty();
    if (to_file) {
        file_out.open(out_path, std::ios::trunc);
        if (!file_out) throw InputError("cannot open output file '" + out_path + "'");
    }
    std::ostream& rows_out = to_file ? file_out : std::cout;
    rows_out << survey_csv_header() << '\n';
    for (const SurveyRow& row : res.rows) rows_out << survey_csv_row(row) << '\n';

    // keep stdout machine-readable when rows go there
    (to_file ? std::cout : std::cerr) << summary_text(res.summary);
    return res.summary.violations || res.summary.quadratic_gap_failures ? 1 : 0;
}

int cmd_family(int c, std::int32_t d, bool check, const EffortCaps& caps) {
    NumericalSemigroup s = extremal_family(c, d);
    std::cout << format_generators(s.generators()) << '\n';
    if (!check) return 0;
    ConsequenceChecks checks = check_extremal_consequences(s, caps);
    std::cout << consequences_json(checks, 2) << '\n';
    return checks.all_pass() ? 0 : 1;
}

int cmd_lemma(int c, std::int32_t d) {
    bound(c, d); // validates c, d >= 2 and guards the powers below against overflow
    auto pow64 = [](std::int64_t b, int k) {
        std::int64_t r = 1;
        while (k-- > 0) r *= b;
        return r;
    };
    std::int64_t closed_at = (d - 1) * pow64(d, c - 2);
    std::int64_t closed_above = pow64(d, c - 1);
    auto print = [&](std::int64_t sum, std::int64_t closed, const char* relation) {
        LemmaResult res = lemma_min_product(c, d, sum);
        std::cout << "sum " << sum << ": min product " << res.minimum << " (" << relation << ' '
                  << closed << "), argmins";
        for (const auto& multiset : res.argmins) {
            std::cout << " {";
            for (std::size_t i = 0; i < multiset.size(); ++i)
                std::cout << (i ? "," : "") << multiset[i];
            std::cout << '}';
        }
        std::cout << '\n';
        return res.minimum;
    };
    std::int64_t at = print(static_cast<std::int64_t>(c - 1) * d, closed_at,
                            "closed form (d-1)d^(c-2) =");
    std::int64_t above = print(static_cast<std::int64_t>(c - 1) * d + 1, closed_above,
                               "lower bound d^(c-1) =");
    if (at != closed_at || above < closed_above)
        throw Error("lemma closed-form comparison failed");
    return 0;
}

int cmd_betti(const std::string& text, int nvars, const EffortCaps&) {
    std::vector<Monomial> gens;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (tok.find_first_not_of(" \t") != std::string::npos)
            gens.push_back(parse_monomial(tok, nvars));
    MonomialIdeal L(nvars, gens);
    BettiTable table = betti_lcm(L);
    if (!(betti_koszul(L) == table)) throw Error("betti_lcm and betti_koszul disagree");
    std::cout << betti_json(table, 2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent cones of monomial curves: multiplicity bound verification"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global cap options after a subcommand name

    EffortCaps caps;
    app.add_option("--max-pairs", caps.max_pairs, "Groebner pair-processing cap")
        ->envname("MONOCURVE_MAX_PAIRS");
    app.add_option("--max-degree", caps.max_degree, "Groebner degree cap")
        ->envname("MONOCURVE_MAX_DEGREE");

    auto* analyze = app.add_subcommand("analyze", "analyze one semigroup");
    std::vector<std::string> gen_args;
    bool as_json = false, with_betti = false, with_consequences = false;
    analyze->add_option("generators", gen_args, "generators, e.g. 3,4,5")
        ->required()
        ->expected(-1);
    analyze->add_flag("--json", as_json, "emit the JSON report");
    analyze->add_flag("--betti", with_betti, "include Betti totals of the leading ideal");
    analyze->add_flag("--consequences", with_consequences,
                      "run the extremal consequence checks (extremal instances only)");

    auto* survey = app.add_subcommand("survey", "analyze every semigroup in a range");
    std::string embdim = "3";
    std::int64_t max_gen = 12;
    std::string out_path, cache_path;
    int jobs = 1;
    survey->add_option("--embdim", embdim, "embedding dimension A or range A..B")->required();
    survey->add_option("--max-gen", max_gen, "largest allowed generator")->required();
    survey->add_option("--out", out_path, "CSV output path (default stdout)");
    survey->add_option("--cache", cache_path, "JSONL result cache, read and appended");
    survey->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* family = app.add_subcommand("family", "the extremal family member for (c, d)");
    int fam_c = 0;
    std::int32_t fam_d = 0;
    bool fam_check = false;
    family->add_option("--c", fam_c, "codimension")->required();
    family->add_option("--d", fam_d, "degree")->required();
    family->add_flag("--check", fam_check, "verify the extremal consequences");

    auto* lemma = app.add_subcommand("lemma", "minimum products at the two critical sums");
    int lem_c = 0;
    std::int32_t lem_d = 0;
    lemma->add_option("--c", lem_c, "number of factors")->required();
    lemma->add_option("--d", lem_d, "factor cap")->required();

    auto* betti = app.add_subcommand("betti", "graded Betti table of a monomial ideal");
    std::string betti_text;
    int betti_vars = 0;
    betti->add_option("ideal", betti_text, "comma-separated monomials, e.g. x1^2,x1*x2")
        ->required();
    betti->add_option("--vars", betti_vars, "ambient variable count")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            std::string joined;
            for (const std::string& a : gen_args) {
                if (!joined.empty()) joined += ' ';
                joined += a;
            }
            return cmd_analyze(joined, caps, as_json, with_betti, with_consequences);
        }
        if (survey->parsed())
            return cmd_survey(embdim, max_gen, out_path, cache_path, jobs, caps);
        if (family->parsed()) return cmd_family(fam_c, fam_d, fam_check, caps);
        if (lemma->parsed()) return cmd_lemma(lem_c, lem_d);
        if (betti->parsed()) return cmd_betti(betti_text, betti_vars, caps);
    } catch (const EffortCapExceeded& ex) {
        std::cerr << "effort cap exceeded: " << ex.what() << '\n';
        return 3;
    } catch (const InputError& ex) {
        std::cerr << "input error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return 4;
    }
    return 0;
}
