#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigzeros/acceptance.hpp"
#include "trigzeros/constants.hpp"
#include "trigzeros/constants_cache.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/experiment.hpp"
#include "trigzeros/kac_rice.hpp"
#include "trigzeros/report.hpp"
#include "trigzeros/zero_counting.hpp"

using namespace trigzeros;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct ModelFlags {
  std::string kind = "trig";
  std::string dep;
  std::optional<int> ell;
  std::optional<int> r;
  double sigma = 1.0;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "trig or cosine")->capture_default_str();
    app->add_option("--dep", dep, "iid or periodic (default: periodic when --ell is given)");
    app->add_option("--ell", ell, "coefficient period");
    app->add_option("--r", r, "expected remainder r of n = ell*m - 1 + r (checked)");
    app->add_option("--sigma", sigma, "coefficient standard deviation")->capture_default_str();
  }

  CoefficientModel model() const {
    CoefficientModel m;
    m.kind = parse_poly_kind(kind);
    m.dependence = dep.empty() ? (ell ? Dependence::Periodic : Dependence::Iid)
                               : parse_dependence(dep);
    m.ell = ell.value_or(1);
    m.sigma = sigma;
    validate_model(m);
    return m;
  }

  void check_degrees(const CoefficientModel& model, const std::vector<int>& ns) const {
    for (int n : ns) {
      if (!model.is_periodic()) {
        if (n < 1) throw ModelError("degree n must be >= 1");
        continue;
      }
      const auto d = decompose_degree(n, model.ell);
      if (r && d.r != *r) {
        std::ostringstream msg;
        msg << "n = " << n << " has r = " << d.r << " for ell = " << model.ell
            << ", not the requested r = " << *r;
        throw ModelError(msg.str());
      }
    }
  }
};

struct Output {
  std::string format = "csv";
  std::string path;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "csv or json")->capture_default_str();
    app->add_option("--out", path, "output file (default stdout)");
  }

  template <typename Fn>
  void write(Fn&& fn) const {
    if (path.empty() || path == "-") {
      fn(std::cout);
      return;
    }
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + path);
    fn(os);
    if (!os) throw std::runtime_error("failed writing " + path);
  }
};

void write_table(std::ostream& os, ReportFormat format, const std::vector<std::string>& cols,
                 const std::vector<nlohmann::json>& rows) {
  if (format == ReportFormat::Json) {
    os << nlohmann::json(rows).dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& v = row.at(cols[i]);
      if (i) os << ',';
      if (v.is_number_float()) {
        os << format_double(v.get<double>());
      } else if (v.is_string()) {
        os << v.get<std::string>();
      } else if (!v.is_null()) {
        os << v.dump();
      }
    }
    os << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeros of random trigonometric polynomials with periodic coefficients"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "TOML/INI file with a [simulate] or [kacrice] section mirroring the flags");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo mean number of real zeros");
  ModelFlags sim_model;
  sim_model.attach(sim);
  std::vector<int> sim_n;
  int trials = 100;
  std::uint64_t seed = 0;
  int grid_per_degree = 32;
  Output sim_out;
  sim->add_option("--n", sim_n, "degree (repeatable)")->required();
  sim->add_option("--trials", trials, "trials per degree")->capture_default_str();
  sim->add_option("--seed", seed, "master seed")->capture_default_str();
  sim->add_option("--grid-per-degree", grid_per_degree, "initial grid nodes per degree")
      ->capture_default_str();
  sim_out.attach(sim);

  // kacrice
  auto* kr = app.add_subcommand("kacrice", "Expected number of zeros by the Kac-Rice integral");
  ModelFlags kr_model;
  kr_model.attach(kr);
  std::vector<int> kr_n;
  QuadConfig quad;
  std::optional<double> exclusion;
  bool exclude_windows = false;
  Output kr_out;
  kr->add_option("--n", kr_n, "degree (repeatable)")->required();
  kr->add_option("--panels-per-degree", quad.panels_per_degree)->capture_default_str();
  kr->add_option("--nodes-per-panel", quad.nodes_per_panel)->capture_default_str();
  kr->add_option("--exclusion-exponent", exclusion, "window exponent a");
  kr->add_flag("--exclude-windows", exclude_windows,
               "leave the windows out and add their bound to the error");
  kr_out.attach(kr);

  // constants
  auto* cs = app.add_subcommand("constants", "Tables of C, J, I_alpha and K");
  std::string table = "C";
  std::vector<int> cs_ell;
  std::vector<double> alphas;
  ConstantGrid grid;
  Output cs_out;
  cs->add_option("--table", table, "C, J, I or K")->capture_default_str();
  cs->add_option("--ell", cs_ell, "period (repeatable; default 2..6)");
  cs->add_option("--alpha", alphas, "alpha for the I table (repeatable)");
  cs->add_option("--panels", grid.panels_per_axis, "panels per axis")->capture_default_str();
  cs->add_option("--nodes-per-panel", grid.nodes_per_panel)->capture_default_str();
  cs_out.attach(cs);

  // verify
  auto* vf = app.add_subcommand("verify", "Run the acceptance suite");
  AcceptanceOptions acc;
  vf->add_flag("--quick", acc.quick, "fewer Monte Carlo trials");
  vf->add_option("--seed", acc.seed, "master seed")->capture_default_str();

  // count
  auto* ct = app.add_subcommand("count", "Count the zeros of one sample");
  ModelFlags ct_model;
  ct_model.attach(ct);
  int ct_n = 0;
  std::uint64_t ct_seed = 0;
  CountOptions copts;
  std::string roots_path;
  ct->add_option("--n", ct_n, "degree")->required();
  ct->add_option("--seed", ct_seed, "sample seed")->capture_default_str();
  ct->add_option("--grid-per-degree", copts.grid_per_degree)->capture_default_str();
  ct->add_option("--roots", roots_path, "write refined roots as CSV (index,x,residual)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sim) {
      ExperimentConfig cfg;
      cfg.model = sim_model.model();
      sim_model.check_degrees(cfg.model, sim_n);
      cfg.n_values = sim_n;
      cfg.trials = trials;
      cfg.master_seed = seed;
      cfg.grid_per_degree = grid_per_degree;
      cfg.format = parse_report_format(sim_out.format);
      cfg.output_path = sim_out.path;
      const auto result = run_experiment(cfg);
      emit_report(result, cfg.format, cfg.output_path);
      for (const auto& row : result.rows) {
        if (row.failed) {
          std::cerr << "n = " << row.n << ": " << row.unstable_trials
                    << " unstable trials, row failed\n";
          return kExitNumerical;
        }
      }
      return kExitOk;
    }

    if (*kr) {
      const auto model = kr_model.model();
      kr_model.check_degrees(model, kr_n);
      quad.exclusion_exponent = exclusion;
      quad.windows = exclude_windows ? WindowPolicy::Exclude : WindowPolicy::Integrate;
      const auto format = parse_report_format(kr_out.format);
      std::vector<nlohmann::json> rows;
      for (int n : kr_n) {
        const auto res = expected_zeros_quadrature(model, n, quad);
        nlohmann::json row = {{"n", n},
                              {"expected_zeros", res.expected_zeros},
                              {"abs_error", res.abs_error_estimate},
                              {"deterministic_zeros", res.deterministic_zeros},
                              {"window_mass", res.window_mass},
                              {"window_bound", res.window_mass_bound},
                              {"windows", res.excluded_windows.size()},
                              {"panels", res.panels_used},
                              {"route", res.route}};
        rows.push_back(row);
      }
      kr_out.write([&](std::ostream& os) {
        write_table(os, format,
                    {"n", "expected_zeros", "abs_error", "deterministic_zeros", "window_mass",
                     "window_bound", "windows", "panels", "route"},
                    rows);
      });
      return kExitOk;
    }

    if (*cs) {
      const auto format = parse_report_format(cs_out.format);
      if (cs_ell.empty()) cs_ell = {2, 3, 4, 5, 6};
      std::vector<nlohmann::json> rows;
      std::vector<std::string> cols;
      if (table == "C" || table == "J") {
        cols = {"ell", "r", table, "error"};
        for (int ell : cs_ell) {
          for (int r = 1; r < ell; ++r) {
            const auto res = table == "C" ? cached_C(ell, r, grid) : compute_J(ell, r, grid);
            rows.push_back({{"ell", ell}, {"r", r}, {table, res.value},
                            {"error", res.abs_error_estimate}});
          }
        }
      } else if (table == "I") {
        cols = {"alpha", "I", "error", "closed_form"};
        if (alphas.empty()) alphas = {std::numbers::pi / 6, std::numbers::pi / 4, 0.3, 0.7, 1.2};
        for (double a : alphas) {
          const auto res = compute_I_alpha(a, grid);
          rows.push_back({{"alpha", a}, {"I", res.value}, {"error", res.abs_error_estimate},
                          {"closed_form", i_alpha_closed_form(a)}});
        }
      } else if (table == "K") {
        cols = {"ell", "K", "error"};
        for (int ell : cs_ell) {
          const auto res = compute_K(ell, grid);
          rows.push_back({{"ell", ell}, {"K", res.value}, {"error", res.abs_error_estimate}});
        }
      } else {
        throw ModelError("unknown table '" + table + "' (expected C, J, I or K)");
      }
      cs_out.write([&](std::ostream& os) { write_table(os, format, cols, rows); });
      return kExitOk;
    }

    if (*vf) {
      bool all = true;
      run_acceptance(acc, [&](const CriterionResult& c) {
        all = all && c.passed;
        std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
                  << " | " << c.detail << std::endl;
      });
      return all ? kExitOk : kExitNumerical;
    }

    if (*ct) {
      const auto model = ct_model.model();
      ct_model.check_degrees(model, {ct_n});
      copts.collect_roots = !roots_path.empty();
      const auto sample = sample_coefficients(model, ct_n, ct_seed);
      const auto rep = count_zeros(sample, copts);
      std::cout << "count=" << rep.count << " stable=" << (rep.stable ? "true" : "false")
                << " grid=" << rep.grid_size << " doublings=" << rep.doublings_used << '\n';
      if (!roots_path.empty()) {
        std::ofstream os(roots_path, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + roots_path);
        write_roots_csv(os, sample, rep);
      }
      return rep.stable ? kExitOk : kExitNumerical;
    }
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
