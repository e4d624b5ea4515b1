#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "trigzeros/coeff_models.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/oracles.hpp"
#include "trigzeros/rng.hpp"
#include "trigzeros/trigpoly.hpp"

using namespace trigzeros;
constexpr double kPi = std::numbers::pi;

TEST_CASE("evaluate matches the long double reference") {
  SplitMix64 xs(5);
  for (auto model : {CoefficientModel::iid(PolyKind::Trig), CoefficientModel::iid(PolyKind::Cosine),
                     CoefficientModel::periodic(PolyKind::Trig, 3),
                     CoefficientModel::periodic(PolyKind::Cosine, 4)}) {
    for (int n : {3, 47, 399}) {
      const auto s = sample_coefficients(model, n, 100 + n);
      const double l1 = coefficient_l1(s);
      for (int i = 0; i < 200; ++i) {
        const double x = 2.0 * kPi * xs.uniform_open();
        const double ref = static_cast<double>(reference_evaluate(s, x));
        REQUIRE(std::abs(evaluate(s, x) - ref) <= 1e-12 * l1);
      }
    }
  }
}

TEST_CASE("small explicit polynomial") {
  // 1 + 2cos x + 3 sin 2x
  const auto s = make_sample({1.0, 2.0, 0.0}, {0.0, 0.0, 3.0});
  for (double x : {0.0, 0.3, 1.7, 4.0}) {
    CHECK(evaluate(s, x) == doctest::Approx(1 + 2 * std::cos(x) + 3 * std::sin(2 * x)));
    CHECK(evaluate_derivative(s, x) ==
          doctest::Approx(-2 * std::sin(x) + 6 * std::cos(2 * x)));
  }
  CHECK(coefficient_l1(s) == 6.0);
}

TEST_CASE("derivative agrees with central differences") {
  const auto s = sample_coefficients(CoefficientModel::periodic(PolyKind::Trig, 2), 61, 9);
  const double h = 1e-5;
  for (double x : {0.11, 1.0, 2.5, 3.3, 6.0}) {
    const double fd = (evaluate(s, x + h) - evaluate(s, x - h)) / (2 * h);
    const auto vs = evaluate_with_derivative(s, x);
    CHECK(vs.slope == doctest::Approx(fd).epsilon(1e-6).scale(coefficient_l1(s)));
    CHECK(vs.value == doctest::Approx(evaluate(s, x)).epsilon(1e-13));
  }
}

TEST_CASE("samples are 2 pi periodic") {
  const auto s = sample_coefficients(CoefficientModel::iid(PolyKind::Trig), 30, 1);
  for (double x : {0.2, 1.9, 3.1}) {
    CHECK(evaluate(s, x + 2 * kPi) == doctest::Approx(evaluate(s, x)).scale(coefficient_l1(s)).epsilon(1e-12));
  }
}

TEST_CASE("sine ratio and Dirichlet ratio") {
  CHECK(sine_ratio(5, 0.0) == doctest::Approx(5.0));
  CHECK(sine_ratio(4, kPi) == doctest::Approx(-4.0));
  CHECK(sine_ratio(3, 0.7) == doctest::Approx(std::sin(2.1) / std::sin(0.7)));
  CHECK(sine_ratio_derivative(6, 0.0) == 0.0);
  CHECK(dirichlet_ratio(7, 3, 0.0) == doctest::Approx(7.0));
  CHECK(dirichlet_ratio(4, 3, 2 * kPi / 3) == doctest::Approx(-4.0));
  const double h = 1e-6;
  for (double x : {0.05, 0.8, 2.2}) {
    const double fd = (dirichlet_ratio(9, 2, x + h) - dirichlet_ratio(9, 2, x - h)) / (2 * h);
    CHECK(dirichlet_ratio_derivative(9, 2, x) == doctest::Approx(fd).epsilon(1e-6));
  }
  // continuity through the removable window
  CHECK(sine_ratio(5, 1e-9) == doctest::Approx(sine_ratio(5, 1e-7)).epsilon(1e-10));
}

TEST_CASE("closed trig sums match direct summation") {
  SplitMix64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int r = 1 + static_cast<int>(rng.next() % 7);
    const double p = 0.5 * (1 + rng.next() % 9);
    const double q = 0.5 * static_cast<double>(rng.next() % 13);
    const double x = 0.05 + 3.0 * rng.uniform_open();
    double c = 0.0, s = 0.0;
    for (int j = 0; j < r; ++j) {
      c += std::cos((2 * p * j + q) * x);
      s += std::sin((2 * p * j + q) * x);
    }
    REQUIRE(trig_sum_cos(r, p, q, x) == doctest::Approx(c).scale(1.0).epsilon(1e-11));
    REQUIRE(trig_sum_sin(r, p, q, x) == doctest::Approx(s).scale(1.0).epsilon(1e-11));
  }
}

TEST_CASE("u_ell limits") {
  CHECK(u_ell(3, 0.0) == doctest::Approx(1.0));
  CHECK(u_ell(3, kPi) == doctest::Approx(1.0));
  CHECK(u_ell(4, kPi) == doctest::Approx(-1.0));
  CHECK(u_ell(1, 0.9) == doctest::Approx(1.0));
  CHECK(u_ell(2, 0.9) == doctest::Approx(std::cos(0.9)));
}

TEST_CASE("periodic r = 0 samples factor as phi_m times the reduced part") {
  for (auto kind : {PolyKind::Trig, PolyKind::Cosine}) {
    for (int ell : {1, 2, 3, 5}) {
      const int m = 13;
      const int n = ell * m - 1;
      const auto s = sample_coefficients(CoefficientModel::periodic(kind, ell), n, 40 + ell);
      const auto red = reduce_periodic(s);
      CHECK(red.m == m);
      CHECK(red.frequencies.size() == static_cast<std::size_t>(ell));
      CHECK(red.frequencies[0].twice == static_cast<long>((m - 1) * ell));
      SplitMix64 xs(ell);
      for (int i = 0; i < 200; ++i) {
        const double x = 2 * kPi * xs.uniform_open();
        const double lhs = evaluate(s, x);
        const double rhs = dirichlet_ratio(m, ell, x) * red.evaluate(x);
        REQUIRE(lhs == doctest::Approx(rhs).scale(coefficient_l1(s)).epsilon(1e-11));
      }
    }
  }
  const auto bad = sample_coefficients(CoefficientModel::periodic(PolyKind::Trig, 3), 10, 1);
  CHECK_THROWS_AS(reduce_periodic(bad), ModelError);
}

TEST_CASE("algebraic factorization") {
  const std::vector<double> base = {1.0, -2.0, 0.5};
  const int ell = 3, m = 4;
  std::vector<double> a;
  for (int i = 0; i < ell * m; ++i) a.push_back(base[i % ell]);
  const auto f = factorize_algebraic(a, ell);
  CHECK(f.degree() == 11);
  CHECK(f.deterministic_roots.size() == static_cast<std::size_t>(ell * (m - 1)));
  for (auto z : f.deterministic_roots) {
    CHECK(std::abs(z) == doctest::Approx(1.0));
    CHECK(std::abs(evaluate_algebraic(a, z)) < 1e-12);
  }
  for (auto z : {std::complex<double>(0.3, 0.4), std::complex<double>(-1.2, 0.1)}) {
    CHECK(std::abs(f.product(z) - evaluate_algebraic(a, z)) < 1e-11 * std::abs(evaluate_algebraic(a, z)) + 1e-12);
  }
  nlohmann::json j = f;
  CHECK(j.contains("deterministic_roots"));
  CHECK_THROWS_AS(factorize_algebraic(std::vector<double>{1.0, 2.0, 3.0, 4.0}, 3), ModelError);
}
