#include "monocurve/report.hpp"

#include <json.hpp>
#include <sstream>

namespace monocurve {

using nlohmann::json;

std::vector<std::int64_t> parse_generators(const std::string& text) {
    std::string body = text;
    for (char& ch : body)
        if (ch == '<' || ch == '>' || ch == ',') ch = ' ';
    std::istringstream in(body);
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad generator '" + tok + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError("no generators in '" + text + "'");
    return out;
}

std::string format_generators(const std::vector<std::int64_t>& gens) {
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(gens[i]);
    }
    return out + ">";
}

std::string class_label(ConeClass cls) {
    switch (cls) {
    case ConeClass::complete_intersection: return "CI";
    case ConeClass::almost_complete_intersection: return "ACI";
    default: return "other";
    }
}

ConeClass class_from_label(const std::string& label) {
    if (label == "CI") return ConeClass::complete_intersection;
    if (label == "ACI") return ConeClass::almost_complete_intersection;
    if (label == "other") return ConeClass::other;
    throw ParseError("unknown class label '" + label + "'");
}

namespace {

json report_object(const AnalysisReport& r) {
    json j;
    j["generators"] = r.semigroup.generators();
    j["c"] = r.c;
    j["d"] = r.d;
    j["e"] = r.e;
    // the theorem needs c >= 2; plane-curve rows carry no bound
    if (r.c >= 2)
        j["bound"] = r.bound;
    else
        j["bound"] = nullptr;
    j["class"] = class_label(r.classification);
    j["cm"] = r.cohen_macaulay;
    j["theorem_ok"] = r.theorem_ok;
    j["extremal"] = r.extremal;
    j["koszul"] = to_string(r.koszul);
    if (!r.betti_totals.empty()) j["betti_totals"] = r.betti_totals;
    return j;
}

} // namespace

std::string report_json(const AnalysisReport& r, int indent) {
    return report_object(r).dump(indent);
}

std::string betti_json(const BettiTable& t, int indent) {
    json graded = json::array();
    for (const auto& [key, beta] : t.graded)
        graded.push_back({key.first, key.second, beta});
    json j;
    j["totals"] = t.totals;
    j["graded"] = graded;
    return j.dump(indent);
}

std::string consequences_json(const ConsequenceChecks& k, int indent) {
    json j;
    j["leading_ideal_shape"] = k.leading_ideal_shape;
    j["aci_and_cm"] = k.aci_and_cm;
    j["betti_totals_match"] = k.betti_totals_match;
    j["betti_graded_match"] = k.betti_graded_match;
    j["colon_linkage"] = k.colon_linkage;
    j["all_pass"] = k.all_pass();
    return j.dump(indent);
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "semigroup        " << format_generators(r.semigroup.generators()) << '\n'
        << "codimension c    " << r.c << '\n'
        << "max gen degree d " << r.d << '\n'
        << "multiplicity e   " << r.e << '\n'
        << "bound            "
        << (r.c >= 2 ? std::to_string(r.bound) + " (d^c - (d-1)d^(c-2))" : "n/a (plane curve)")
        << '\n'
        << "class            " << class_label(r.classification) << '\n'
        << "cohen_macaulay   " << (r.cohen_macaulay ? "true" : "false") << '\n'
        << "theorem_ok       " << (r.theorem_ok ? "true" : "false") << '\n'
        << "extremal         " << (r.extremal ? "true" : "false") << '\n'
        << "koszul           " << to_string(r.koszul) << '\n';
    if (!r.betti_totals.empty()) {
        out << "betti_totals    ";
        for (auto b : r.betti_totals) out << ' ' << b;
        out << '\n';
    }
    return out.str();
}

std::string survey_csv_header() {
    return "generators,n0,c,d,e,bound,class,cm,theorem_ok,extremal,koszul,elapsed_ms";
}

std::string survey_csv_row(const SurveyRow& row) {
    std::ostringstream out;
    out << '"' << format_generators(row.generators) << '"' << ',' << row.generators.front()
        << ',';
    if (row.report) {
        const AnalysisReport& r = *row.report;
        out << r.c << ',' << r.d << ',' << r.e << ',';
        if (r.c >= 2) out << r.bound;
        out << ',' << class_label(r.classification) << ',' << (r.cohen_macaulay ? "true" : "false")
            << ',' << (r.theorem_ok ? "true" : "false") << ',' << (r.extremal ? "true" : "false")
            << ',' << to_string(r.koszul);
    } else {
        out << ",,,,cap,,,,";
    }
    out << ',' << row.elapsed_ms;
    return out.str();
}

std::string cache_line(const SurveyRow& row) {
    if (!row.report) throw InputError("capped analyses are not cached");
    json j = report_object(*row.report);
    j["elapsed_ms"] = row.elapsed_ms;
    return j.dump();
}

SurveyRow parse_cache_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad cache line: ") + ex.what());
    }
    try {
        std::vector<std::int64_t> gens = j.at("generators").get<std::vector<std::int64_t>>();
        AnalysisReport r{canonicalize(gens)};
        if (r.semigroup.generators() != gens)
            throw ParseError("cache line generators are not minimal");
        r.c = j.at("c").get<int>();
        r.d = j.at("d").get<std::int32_t>();
        r.e = j.at("e").get<std::int64_t>();
        if (!j.at("bound").is_null()) r.bound = j.at("bound").get<std::int64_t>();
        r.classification = class_from_label(j.at("class").get<std::string>());
        r.cohen_macaulay = j.at("cm").get<bool>();
        r.theorem_ok = j.at("theorem_ok").get<bool>();
        r.extremal = j.at("extremal").get<bool>();
        std::string k = j.at("koszul").get<std::string>();
        if (k != "certified" && k != "inconclusive")
            throw ParseError("unknown koszul status '" + k + "'");
        r.koszul = k == "certified" ? KoszulStatus::certified : KoszulStatus::inconclusive;
        if (j.contains("betti_totals"))
            r.betti_totals = j["betti_totals"].get<std::vector<std::int64_t>>();
        SurveyRow row{gens, std::move(r), j.at("elapsed_ms").get<std::int64_t>()};
        return row;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad cache line: ") + ex.what());
    }
}

} // namespace monocurve
