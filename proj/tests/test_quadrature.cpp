#include <cmath>
#include <numbers>

#include "doctest.h"
#include "trigzeros/error.hpp"
#include "trigzeros/quadrature.hpp"

using namespace trigzeros;
constexpr double kPi = std::numbers::pi;

TEST_CASE("Gauss-Legendre rules") {
  for (int q : {1, 2, 5, 16, 30}) {
    const auto& rule = gauss_legendre(q);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(q));
    double w = 0.0;
    for (double v : rule.weights) w += v;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // exact for degree 2q-1
    for (int d = 0; d <= 2 * q - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < q; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(s == doctest::Approx(exact).scale(1.0).epsilon(1e-13));
    }
  }
  CHECK(&gauss_legendre(7) == &gauss_legendre(7));
  CHECK_THROWS_AS(gauss_legendre(0), ModelError);
}

TEST_CASE("panel layouts tile the interval") {
  auto check_tiling = [](const std::vector<Panel>& p, double lo, double hi) {
    REQUIRE_FALSE(p.empty());
    CHECK(p.front().lo == lo);
    CHECK(p.back().hi == hi);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i].hi > p[i].lo);
      if (i) CHECK(p[i].lo == p[i - 1].hi);
    }
  };
  check_tiling(uniform_panels(0.0, 1.0, 7), 0.0, 1.0);
  const auto g = graded_panels(0.0, kPi, 4, 5, 0.25, true, true);
  check_tiling(g, 0.0, kPi);
  CHECK(g.size() == 4 + 2 * 5);
  CHECK(g.front().hi - g.front().lo == doctest::Approx(kPi / 4 * std::pow(0.25, 5)));
  check_tiling(graded_panels(0.0, 1.0, 1, 3, 0.5, true, true), 0.0, 1.0);
  const auto w = panels_with_max_width(0.0, 1.0, 0.3);
  check_tiling(w, 0.0, 1.0);
  CHECK(w.size() == 4);
  CHECK(panels_with_max_width(1.0, 1.0, 0.1).empty());
  CHECK_THROWS_AS(uniform_panels(0.0, 1.0, 0), ModelError);
  CHECK_THROWS_AS(graded_panels(0.0, 1.0, 2, 3, 1.0, true, false), ModelError);
}

TEST_CASE("composite rule integrates smooth and endpoint-singular functions") {
  const auto& rule = gauss_legendre(16);
  auto sine = [](double x) { return std::sin(x); };
  CHECK(integrate_composite(sine, uniform_panels(0.0, kPi, 4), rule).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  // 1/sqrt(x) on (0, 1) needs grading toward 0
  auto inv_sqrt = [](double x) { return 1.0 / std::sqrt(x); };
  const double graded =
      integrate_composite(inv_sqrt, graded_panels(0.0, 1.0, 4, 60, 0.25, true, false), rule).value;
  CHECK(graded == doctest::Approx(2.0).epsilon(1e-12));
  const auto c = composite_rule(uniform_panels(0.0, 2.0, 3), rule);
  double wsum = 0.0;
  for (double v : c.w) wsum += v;
  CHECK(c.x.size() == 48);
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("serial and parallel composite sums agree bit for bit") {
  auto f = [](double x) { return std::exp(std::sin(7 * x)) / (1.1 + std::cos(x)); };
  const auto panels = uniform_panels(0.0, 2 * kPi, 500);
  const auto a = integrate_composite(f, panels, gauss_legendre(12), Execution::Serial);
  const auto b = integrate_composite(f, panels, gauss_legendre(12), Execution::Parallel);
  CHECK(a.value == b.value);
  CHECK(a.abs_value == b.abs_value);
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 0.0, 1e-10);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(r.abs_error < 1e-8);
  const auto p = integrate_panels_adaptive([](double x) { return x * x; },
                                           uniform_panels(0.0, 3.0, 5), 1e-13, 1e-13,
                                           Execution::Parallel);
  CHECK(p.value == doctest::Approx(9.0).epsilon(1e-13));
  CHECK(p.abs_value == doctest::Approx(9.0).epsilon(1e-13));
  CHECK_THROWS_AS(integrate_adaptive([](double) { return std::nan(""); }, 0.0, 1.0, 0.0, 1e-10),
                  NumericalError);
}
