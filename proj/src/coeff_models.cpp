#include "trigzeros/coeff_models.hpp"

#include <cmath>
#include <sstream>

#include "trigzeros/error.hpp"
#include "trigzeros/rng.hpp"

namespace trigzeros {

PeriodDecomposition decompose_degree(int n, int ell) {
  if (ell < 1) {
    throw ModelError("period ell must be >= 1, got " + std::to_string(ell));
  }
  if (n < 1) {
    throw ModelError("degree n must be >= 1, got " + std::to_string(n));
  }
  if (n < ell - 1) {
    throw ModelError("degree n=" + std::to_string(n) + " < ell-1=" +
                     std::to_string(ell - 1) + ": no m >= 1 exists");
  }
  // n + 1 = ell*m + r
  const int m = (n + 1) / ell;
  const int r = (n + 1) % ell;
  return {n, m, r};
}

void validate_model(const CoefficientModel& model) {
  std::vector<std::string> problems;
  if (!(model.sigma > 0.0) || !std::isfinite(model.sigma)) {
    problems.push_back("sigma must be a positive finite number (got " +
                       std::to_string(model.sigma) + ")");
  }
  if (model.is_periodic() && model.ell < 1) {
    problems.push_back("periodic models need ell >= 1 (got " +
                       std::to_string(model.ell) + ")");
  }
  if (!model.is_periodic() && model.ell != 1) {
    problems.push_back("iid models carry ell = 1 (got " +
                       std::to_string(model.ell) + ")");
  }
  if (problems.empty()) return;
  std::string msg = "invalid coefficient model:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw ModelError(msg);
}

PolySample sample_coefficients(const CoefficientModel& model, int n,
                               std::uint64_t seed) {
  validate_model(model);
  if (n < 0) throw ModelError("degree must be non-negative");

  PolySample s;
  s.n = n;
  s.model = model;
  s.seed = seed;
  s.a.assign(n + 1, 0.0);
  s.b.assign(n + 1, 0.0);

  GaussianStream gauss(seed, model.sigma);
  if (!model.is_periodic()) {
    for (auto& v : s.a) v = gauss.next();
    if (model.has_sine()) {
      for (auto& v : s.b) v = gauss.next();
    }
    return s;
  }

  decompose_degree(n, model.ell);
  const int ell = model.ell;
  for (int k = 0; k < ell; ++k) s.a[k] = gauss.next();
  if (model.has_sine()) {
    for (int k = 0; k < ell; ++k) s.b[k] = gauss.next();
  }
  // copy, never recompute: a[i] is bitwise a[i - ell]
  for (int i = ell; i <= n; ++i) {
    s.a[i] = s.a[i - ell];
    s.b[i] = s.b[i - ell];
  }
  return s;
}

PolySample make_sample(std::vector<double> a, std::vector<double> b,
                       const CoefficientModel& model) {
  if (a.empty()) throw ModelError("coefficient vector must be non-empty");
  if (b.empty()) b.assign(a.size(), 0.0);
  if (a.size() != b.size()) {
    throw ModelError("cosine and sine coefficient vectors differ in length");
  }
  PolySample s;
  s.n = static_cast<int>(a.size()) - 1;
  s.a = std::move(a);
  s.b = std::move(b);
  s.model = model;
  return s;
}

std::string to_string(PolyKind kind) {
  return kind == PolyKind::Trig ? "trig" : "cosine";
}

std::string to_string(Dependence dep) {
  return dep == Dependence::Iid ? "iid" : "periodic";
}

std::string describe(const CoefficientModel& model) {
  std::ostringstream os;
  os << "kind=" << to_string(model.kind)
     << " dep=" << to_string(model.dependence);
  if (model.is_periodic()) os << " ell=" << model.ell;
  os << " sigma=" << model.sigma;
  return os.str();
}

PolyKind parse_poly_kind(const std::string& text) {
  if (text == "trig") return PolyKind::Trig;
  if (text == "cosine" || text == "cos") return PolyKind::Cosine;
  throw ModelError("unknown polynomial kind '" + text + "' (trig|cosine)");
}

Dependence parse_dependence(const std::string& text) {
  if (text == "iid") return Dependence::Iid;
  if (text == "periodic") return Dependence::Periodic;
  throw ModelError("unknown dependence '" + text + "' (iid|periodic)");
}

}  // namespace trigzeros
