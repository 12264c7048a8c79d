#include "monocurve/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "monocurve/toric.hpp"

namespace monocurve {

namespace {

// Codim-1 instances are excluded from verify_theorem, but the cone pipeline
// itself applies; gr_m(R) is (x1^{n0}), a complete intersection.
AnalysisReport plane_curve_report(const NumericalSemigroup& s, const EffortCaps& caps) {
    GradedIdeal J = tangent_cone(defining_ideal(s, caps), caps);
    GradedInvariants inv = graded_invariants(J);
    AnalysisReport r{s};
    r.c = s.codim();
    r.d = inv.max_gen_degree;
    r.e = inv.multiplicity;
    r.classification = classify(J);
    r.cohen_macaulay = is_cohen_macaulay(J, caps);
    r.theorem_ok = true;
    r.extremal = false;
    r.koszul = inv.max_gen_degree <= 2 ? KoszulStatus::certified : KoszulStatus::inconclusive;
    return r;
}

} // namespace

SurveyRow analyze_row(const NumericalSemigroup& s, const EffortCaps& caps) {
    SurveyRow row{s.generators(), std::nullopt, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        row.report = s.codim() >= 2 ? verify_theorem(s, caps) : plane_curve_report(s, caps);
    } catch (const EffortCapExceeded&) {
        // recorded in the row, not fatal
    }
    auto t1 = std::chrono::steady_clock::now();
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

SurveyResult run_survey(const SurveyOptions& opt, SurveyCache& cache,
                        const std::function<void(const SurveyRow&)>& on_fresh) {
    if (opt.embdim_lo < 2 || opt.embdim_hi < opt.embdim_lo)
        throw ParameterOutOfRangeError("bad embdim range");
    if (opt.max_generator < 2) throw ParameterOutOfRangeError("max_generator < 2");

    std::vector<NumericalSemigroup> pool;
    for (int embdim = opt.embdim_lo; embdim <= opt.embdim_hi; ++embdim) {
        std::vector<NumericalSemigroup> part = enumerate_semigroups(embdim, opt.max_generator);
        pool.insert(pool.end(), part.begin(), part.end());
    }
    std::sort(pool.begin(), pool.end());

    SurveyResult res;
    res.rows.resize(pool.size());
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        auto hit = cache.find(pool[i].generators());
        if (hit != cache.end()) {
            res.rows[i] = hit->second;
            ++res.summary.from_cache;
        } else {
            pending.push_back(i);
        }
    }

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || pending.size() <= 1) {
        for (std::size_t i : pending) res.rows[i] = analyze_row(pool[i], opt.caps);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex fail_mutex;
        std::exception_ptr failure;
        auto worker = [&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= pending.size()) return;
                try {
                    res.rows[pending[k]] = analyze_row(pool[pending[k]], opt.caps);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (std::size_t i : pending) {
        const SurveyRow& row = res.rows[i];
        if (!row.report) continue; // capped: leave uncached so a rerun can retry
        cache.emplace(row.generators, row);
        if (on_fresh) on_fresh(row);
    }

    for (const SurveyRow& row : res.rows) {
        ++res.summary.rows;
        if (!row.report) {
            ++res.summary.capped;
            continue;
        }
        const AnalysisReport& r = *row.report;
        if (!r.theorem_ok) ++res.summary.violations;
        if (r.extremal) ++res.summary.extremal_found;
        if (r.c >= 2 && r.d == 2) {
            ++res.summary.quadratic;
            std::int64_t full = std::int64_t{1} << r.c;
            if (!(r.e <= r.bound || r.e == full)) ++res.summary.quadratic_gap_failures;
        }
    }
    return res;
}

SurveyCache load_cache(const std::string& path) {
    SurveyCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SurveyRow row = parse_cache_line(line);
        cache.insert_or_assign(row.generators, std::move(row));
    }
    return cache;
}

std::string summary_text(const SurveySummary& s) {
    std::ostringstream out;
    out << "semigroups analyzed  " << s.rows << " (" << s.from_cache << " from cache, "
        << s.capped << " capped)\n"
        << "theorem violations   " << s.violations << '\n'
        << "extremal instances   " << s.extremal_found << '\n'
        << "quadratic instances  " << s.quadratic << " (" << s.quadratic_gap_failures
        << " gap failures)\n";
    return out.str();
}

} // namespace monocurve
