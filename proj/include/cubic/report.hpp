#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cubic/jordan.hpp"
#include "cubic/legendre.hpp"
#include "cubic/severi.hpp"

namespace cubic {

using Json = nlohmann::json;  // alphabetically ordered keys: stable output

struct JordanSummary {
    int dimension = 0;
    Vec unit;
    Rational unit_value;
    JordanReport report;
    std::optional<bool> simple;
};

struct AnalysisReport {
    std::string input;  // canonical polynomial text
    int n = 0;
    std::uint64_t seed = 0;
    legendre::LegendreVerdict verdict;
    std::optional<JordanSummary> jordan;
    std::optional<SeveriReport> severi;
    std::optional<legendre::RationalFit> rational_fit;  // NotEKP inputs only
    std::optional<std::string> severi_notice;
    std::vector<std::pair<std::string, double>> timings_ms;
    bool include_timings = false;
};

Json rational_fit_to_json(const legendre::RationalFit& fit);
Json verdict_to_json(const legendre::LegendreVerdict& v);
Json jordan_report_to_json(const JordanReport& r);
Json jordan_summary_to_json(const JordanSummary& s);
// Full serialization including the structure-constant tensor as a flat
// array in (i,j,k) order.
Json jordan_structure_to_json(const JordanStructure& j, const JordanReport* report);
Json severi_report_to_json(const SeveriReport& r);
Json analysis_report_to_json(const AnalysisReport& r);

std::string analysis_report_to_text(const AnalysisReport& r);

}  // namespace cubic
