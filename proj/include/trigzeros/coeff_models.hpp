#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trigzeros {

enum class PolyKind { Trig, Cosine };
enum class Dependence { Iid, Periodic };

/// Gaussian coefficient ensemble. `ell` is only meaningful when
/// `dependence == Periodic`; iid models carry ell = 1.
struct CoefficientModel {
  PolyKind kind = PolyKind::Trig;
  Dependence dependence = Dependence::Iid;
  int ell = 1;
  double sigma = 1.0;

  static CoefficientModel iid(PolyKind kind, double sigma = 1.0) {
    return {kind, Dependence::Iid, 1, sigma};
  }
  static CoefficientModel periodic(PolyKind kind, int ell, double sigma = 1.0) {
    return {kind, Dependence::Periodic, ell, sigma};
  }

  bool is_periodic() const { return dependence == Dependence::Periodic; }
  bool has_sine() const { return kind == PolyKind::Trig; }

  friend bool operator==(const CoefficientModel&, const CoefficientModel&) = default;
};

/// n = ell*m - 1 + r with m >= 1 and 0 <= r < ell.
struct PeriodDecomposition {
  int n = 0;
  int m = 0;
  int r = 0;
};

/// One realization: coefficients of cos(jx) in `a` and sin(jx) in `b`,
/// both of length n+1. `b` is all zero for cosine polynomials.
struct PolySample {
  int n = 0;
  std::vector<double> a;
  std::vector<double> b;
  CoefficientModel model;
  std::uint64_t seed = 0;
};

PeriodDecomposition decompose_degree(int n, int ell);

/// Throws ModelError listing every violated invariant.
void validate_model(const CoefficientModel& model);

PolySample sample_coefficients(const CoefficientModel& model, int n,
                               std::uint64_t seed);

/// Builds a sample from explicit coefficients (b may be empty for cosine).
PolySample make_sample(std::vector<double> a, std::vector<double> b,
                       const CoefficientModel& model = {});

std::string to_string(PolyKind kind);
std::string to_string(Dependence dep);
std::string describe(const CoefficientModel& model);
PolyKind parse_poly_kind(const std::string& text);
Dependence parse_dependence(const std::string& text);

}  // namespace trigzeros
