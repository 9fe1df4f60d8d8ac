#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "metric_lines/dh.hpp"
#include "metric_lines/lab.hpp"
#include "metric_lines/lines.hpp"

namespace metric_lines {

/// { "n", "distinct_lines", "has_universal", "lines", "generators" }
nlohmann::ordered_json to_json(const LineSet& lines);
nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const CorpusSpec& corpus);

/// Wall-clock duration is only emitted when `with_timing` is set; everything
/// else is a pure function of the corpus spec.
nlohmann::ordered_json to_json(const SweepReport& report, bool with_timing = false);
nlohmann::ordered_json to_json(const LemmaSweepReport& report, bool with_timing = false);
nlohmann::ordered_json to_json(const LemmaResult& triangle, const LemmaResult& xaxb);
nlohmann::ordered_json to_json(const PruningResult& result);

/// Header "n,instances,min_lines_non_universal,violations", one row per n.
std::string to_csv(const SweepReport& report);
/// Header "side,n,distinct_lines,n_4_3,ratio".
std::string to_csv(const std::vector<ScalingRow>& rows);

std::string describe(const CorpusSpec& corpus);

}  // namespace metric_lines
