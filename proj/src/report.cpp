#include "trigzeros/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace trigzeros {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> number_or_empty(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  return {{"kind", to_string(c.model.kind)},
          {"dependence", to_string(c.model.dependence)},
          {"ell", c.model.ell},
          {"sigma", c.model.sigma},
          {"n_values", c.n_values},
          {"trials", c.trials},
          {"master_seed", c.master_seed},
          {"grid_per_degree", c.grid_per_degree}};
}

nlohmann::json row_to_json(const ExperimentRow& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"r", r.r},
          {"empirical_mean", r.empirical_mean},
          {"stddev", r.stddev},
          {"stderr", r.standard_error},
          {"theory", optional_number(r.theory)},
          {"order_tag", r.order_tag},
          {"z_score", optional_number(r.z_score)},
          {"unstable_trials", r.unstable_trials},
          {"failed", r.failed}};
}

ExperimentRow row_from_json(const nlohmann::json& j) {
  ExperimentRow r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.r = j.at("r").get<int>();
  r.empirical_mean = j.at("empirical_mean").get<double>();
  r.stddev = j.at("stddev").get<double>();
  r.standard_error = j.at("stderr").get<double>();
  r.theory = number_or_empty(j.at("theory"));
  r.order_tag = j.at("order_tag").get<std::string>();
  r.z_score = number_or_empty(j.at("z_score"));
  r.unstable_trials = j.at("unstable_trials").get<int>();
  r.failed = j.value("failed", false);
  return r;
}

std::vector<ExperimentRow> rows_from_json(const nlohmann::json& report) {
  std::vector<ExperimentRow> rows;
  for (const auto& j : report.at("rows")) rows.push_back(row_from_json(j));
  return rows;
}

void write_report(std::ostream& os, const ExperimentResult& result, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : result.rows) rows.push_back(row_to_json(r));
    const nlohmann::json doc = {{"config", config_to_json(result.config)}, {"rows", rows}};
    os << doc.dump(2) << '\n';
    return;
  }
  const auto& c = result.config;
  os << "# kind=" << to_string(c.model.kind) << '\n'
     << "# dependence=" << to_string(c.model.dependence) << '\n'
     << "# ell=" << c.model.ell << '\n'
     << "# sigma=" << format_double(c.model.sigma) << '\n'
     << "# n_values=" << join_ints(c.n_values) << '\n'
     << "# trials=" << c.trials << '\n'
     << "# master_seed=" << c.master_seed << '\n'
     << "# grid_per_degree=" << c.grid_per_degree << '\n';
  os << kReportColumns << '\n';
  for (const auto& r : result.rows) {
    os << r.n << ',' << r.m << ',' << r.r << ',' << format_double(r.empirical_mean) << ','
       << format_double(r.stddev) << ',' << format_double(r.standard_error) << ','
       << (r.theory ? format_double(*r.theory) : "") << ',' << r.order_tag << ','
       << (r.z_score ? format_double(*r.z_score) : "") << ',' << r.unstable_trials << '\n';
  }
}

void emit_report(const ExperimentResult& result, ReportFormat format,
                 const std::string& path) {
  if (path.empty() || path == "-") {
    write_report(std::cout, result, format);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  write_report(out, result, format);
  if (!out) throw std::runtime_error("failed writing report file " + path);
}

}  // namespace trigzeros
