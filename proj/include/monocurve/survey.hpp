#ifndef MONOCURVE_SURVEY_HPP
#define MONOCURVE_SURVEY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "monocurve/report.hpp"

namespace monocurve {

struct SurveyOptions {
    int embdim_lo = 3;
    int embdim_hi = 3;
    std::int64_t max_generator = 12;
    int jobs = 1;
    EffortCaps caps;
};

struct SurveySummary {
    std::int64_t rows = 0;
    std::int64_t from_cache = 0;
    std::int64_t capped = 0;
    std::int64_t violations = 0; // expected 0: each one is a would-be counterexample
    std::int64_t extremal_found = 0;
    std::int64_t quadratic = 0;
    std::int64_t quadratic_gap_failures = 0; // expected 0
};

using SurveyCache = std::map<std::vector<std::int64_t>, SurveyRow>;

// Analyze one semigroup, timing the run.  Effort-cap hits yield a row with no
// report.  Plane curves (codim 1) fall outside the theorem and get a direct
// pipeline report: always CI, theorem trivially satisfied, no bound.
SurveyRow analyze_row(const NumericalSemigroup& s, const EffortCaps& caps);

struct SurveyResult {
    std::vector<SurveyRow> rows; // ordered by generator tuple
    SurveySummary summary;
};

// Analyzes every numerical semigroup with embedding dimension in
// [embdim_lo, embdim_hi] and all generators <= max_generator, fanning the
// fresh work out over `jobs` workers.  Rows present in `cache` are reused
// verbatim; fresh uncapped rows are added to it and handed to `on_fresh` in
// deterministic (generator-tuple) order.
SurveyResult run_survey(const SurveyOptions& opt, SurveyCache& cache,
                        const std::function<void(const SurveyRow&)>& on_fresh = {});

// Reads a JSONL cache; a missing file yields an empty cache.  Throws
// ParseError on malformed lines.
SurveyCache load_cache(const std::string& path);

std::string summary_text(const SurveySummary& s);

} // namespace monocurve

#endif
