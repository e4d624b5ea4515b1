#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trigzeros/coeff_models.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/grid_eval.hpp"
#include "trigzeros/trigpoly.hpp"

using namespace trigzeros;

TEST_CASE("grid nodes") {
  CHECK(grid_node(0, 8) == 0.0);
  CHECK(grid_node(2, 8) == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  const auto s = sample_coefficients(CoefficientModel::iid(PolyKind::Trig), 150, 2);
  const auto a = evaluate_grid_serial(s, 4096);
  const auto b = evaluate_grid_parallel(s, 4096);
  CHECK(a.value == b.value);
  CHECK(a.slope == b.slope);
}

TEST_CASE("FFT kernel matches the series") {
  for (auto model : {CoefficientModel::iid(PolyKind::Trig),
                     CoefficientModel::periodic(PolyKind::Cosine, 3),
                     CoefficientModel::periodic(PolyKind::Trig, 2)}) {
    for (int n : {5, 101, 599}) {
      const auto s = sample_coefficients(model, n, n);
      const int nodes = 8 * (n + 1);
      const auto a = evaluate_grid_serial(s, nodes);
      const auto f = evaluate_grid(s, nodes, GridMethod::Fft);
      const double l1 = coefficient_l1(s);
      double worst_v = 0.0, worst_d = 0.0;
      for (int i = 0; i < nodes; ++i) {
        worst_v = std::max(worst_v, std::abs(a.value[i] - f.value[i]));
        worst_d = std::max(worst_d, std::abs(a.slope[i] - f.slope[i]));
      }
      CHECK(worst_v <= 1e-12 * l1);
      CHECK(worst_d <= 1e-12 * l1 * n);
      CHECK(a.value[nodes / 3] == doctest::Approx(evaluate(s, grid_node(nodes / 3, nodes))).epsilon(1e-13));
    }
  }
}

TEST_CASE("FFT kernel rejects too few nodes") {
  const auto s = sample_coefficients(CoefficientModel::iid(PolyKind::Trig), 10, 2);
  CHECK_THROWS(evaluate_grid_fft(s, 21));
  CHECK_NOTHROW(evaluate_grid_fft(s, 22));
}
