#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigzeros/experiment.hpp"

namespace trigzeros {

/// Column order of the CSV report.
inline constexpr const char* kReportColumns =
    "n,m,r,empirical_mean,stddev,stderr,theory,order_tag,z_score,unstable_trials";

/// CSV: the config as leading "# key=value" lines, then the header and one row
/// per n. JSON: {"config": {...}, "rows": [...]}. Numbers use %.17g so the
/// report parses back to the same doubles.
void write_report(std::ostream& os, const ExperimentResult& result, ReportFormat format);

/// Writes to `path`, or to stdout when `path` is empty or "-".
void emit_report(const ExperimentResult& result, ReportFormat format,
                 const std::string& path);

nlohmann::json config_to_json(const ExperimentConfig& config);
nlohmann::json row_to_json(const ExperimentRow& row);
ExperimentRow row_from_json(const nlohmann::json& j);
std::vector<ExperimentRow> rows_from_json(const nlohmann::json& report);

/// %.17g
std::string format_double(double v);

}  // namespace trigzeros
