#ifndef MONOCURVE_REPORT_HPP
#define MONOCURVE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocurve/extremal.hpp"

namespace monocurve {

// "3,4,5" (commas and/or blanks, optional <>) -> raw generator list.
// Throws ParseError on anything else.
std::vector<std::int64_t> parse_generators(const std::string& text);

// "<3,4,5>"
std::string format_generators(const std::vector<std::int64_t>& gens);

// Short class labels used in every serialized report.
std::string class_label(ConeClass cls);
ConeClass class_from_label(const std::string& label); // throws ParseError

// {"generators": [...], "c": .., "d": .., "e": .., "bound": ..,
//  "class": "CI|ACI|other", "cm": .., "theorem_ok": .., "extremal": ..,
//  "koszul": "certified|inconclusive"}; betti_totals appended when present.
// indent < 0 gives one line.
std::string report_json(const AnalysisReport& r, int indent = -1);

// {"totals": [...], "graded": [[i, j, beta], ...]} with rows sorted by (i, j).
std::string betti_json(const BettiTable& t, int indent = -1);

std::string consequences_json(const ConsequenceChecks& k, int indent = -1);

// Multi-line human-readable form of the same report.
std::string report_text(const AnalysisReport& r);

// One survey result; report is absent when the analysis hit an effort cap.
struct SurveyRow {
    std::vector<std::int64_t> generators;
    std::optional<AnalysisReport> report;
    std::int64_t elapsed_ms = 0;
};

// generators,n0,c,d,e,bound,class,cm,theorem_ok,extremal,koszul,elapsed_ms
std::string survey_csv_header();

// Capped rows keep generators, n0 and elapsed_ms, put "cap" in the class
// column and leave the unknown columns empty.
std::string survey_csv_row(const SurveyRow& row);

// One JSONL cache line: the report object plus "elapsed_ms".
std::string cache_line(const SurveyRow& row);

// Inverse of cache_line; throws ParseError on malformed input.
SurveyRow parse_cache_line(const std::string& line);

} // namespace monocurve

#endif
