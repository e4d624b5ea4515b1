#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "trigzeros/experiment.hpp"
#include "trigzeros/report.hpp"

using namespace trigzeros;

namespace {

ExperimentResult sample_result() {
  ExperimentResult res;
  res.config.model = CoefficientModel::periodic(PolyKind::Trig, 2);
  res.config.n_values = {199, 200};
  res.config.trials = 7;
  res.config.master_seed = 3;
  ExperimentRow a;
  a.n = 199;
  a.m = 100;
  a.r = 0;
  a.empirical_mean = 397.1428571428571;
  a.stddev = 1.0 / 3.0;
  a.standard_error = 0.1259881576697424;
  a.theory = 397.00251254695206;
  a.order_tag = "exact";
  a.z_score = 1.1130;
  ExperimentRow b = a;
  b.n = 200;
  b.r = 1;
  b.theory.reset();
  b.z_score.reset();
  b.order_tag = "";
  b.unstable_trials = 1;
  b.failed = true;
  res.rows = {a, b};
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("CSV layout") {
  std::ostringstream os;
  write_report(os, sample_result(), ReportFormat::Csv);
  const auto lines = lines_of(os.str());
  std::vector<std::string> body;
  for (const auto& l : lines) {
    if (l.rfind("# ", 0) != 0) body.push_back(l);
  }
  REQUIRE(body.size() == 3);
  CHECK(body[0] == kReportColumns);
  CHECK(body[1].rfind("199,100,0,397.14285714285711,", 0) == 0);
  // empty optionals stay empty
  CHECK(body[2].find(",,,") != std::string::npos);
  CHECK(os.str().find("# trials=7") != std::string::npos);
}

TEST_CASE("CSV of an empty result is header only") {
  ExperimentResult res = sample_result();
  res.rows.clear();
  std::ostringstream os;
  write_report(os, res, ReportFormat::Csv);
  const auto lines = lines_of(os.str());
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.back() == kReportColumns);
}

TEST_CASE("JSON round trip is exact") {
  const auto res = sample_result();
  std::ostringstream os;
  write_report(os, res, ReportFormat::Json);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["config"]["ell"] == 2);
  CHECK(doc["rows"].size() == 2);
  const auto rows = rows_from_json(doc);
  CHECK(rows == res.rows);
  CHECK(row_from_json(row_to_json(res.rows[1])) == res.rows[1]);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("emit_report writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "trigzeros_report_test.csv";
  emit_report(sample_result(), ReportFormat::Csv, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::ostringstream direct;
  write_report(direct, sample_result(), ReportFormat::Csv);
  CHECK(ss.str() == direct.str());
  std::filesystem::remove(path);
}
