#include <cmath>
#include <set>
#include <string>

#include "doctest.h"
#include "trigzeros/coeff_models.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/rng.hpp"

using namespace trigzeros;

TEST_CASE("decompose_degree") {
  auto d = decompose_degree(299, 3);
  CHECK(d.m == 100);
  CHECK(d.r == 0);
  d = decompose_degree(300, 2);
  CHECK(d.m == 150);
  CHECK(d.r == 1);
  d = decompose_degree(5, 1);
  CHECK(d.m == 6);
  CHECK(d.r == 0);
  for (int ell = 1; ell <= 7; ++ell) {
    for (int n = ell - 1; n < 60; ++n) {
      if (n < 1) continue;
      d = decompose_degree(n, ell);
      CHECK(n == ell * d.m - 1 + d.r);
      CHECK(d.m >= 1);
      CHECK(d.r >= 0);
      CHECK(d.r < ell);
      CHECK((d.r == 0) == ((n + 1) % ell == 0));
    }
  }
  CHECK_THROWS_AS(decompose_degree(2, 5), ModelError);
  CHECK_THROWS_AS(decompose_degree(0, 1), ModelError);
  CHECK_THROWS_AS(decompose_degree(10, 0), ModelError);
}

TEST_CASE("validate_model") {
  CHECK_THROWS_AS(validate_model(CoefficientModel::iid(PolyKind::Trig, 0.0)), ModelError);
  CHECK_THROWS_AS(validate_model(CoefficientModel::periodic(PolyKind::Trig, 0)), ModelError);
  CHECK_NOTHROW(validate_model(CoefficientModel::periodic(PolyKind::Trig, 5, 1.0)));
  CHECK_THROWS_AS(validate_model(CoefficientModel::iid(PolyKind::Trig, std::nan(""))),
                  ModelError);
  try {
    validate_model(CoefficientModel::periodic(PolyKind::Cosine, 0, -1.0));
    FAIL("expected ModelError");
  } catch (const ModelError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("sigma") != std::string::npos);
    CHECK(msg.find("ell") != std::string::npos);
  }
}

TEST_CASE("periodic samples repeat bit for bit") {
  const auto s = sample_coefficients(CoefficientModel::periodic(PolyKind::Trig, 3), 299, 11);
  REQUIRE(s.a.size() == 300);
  REQUIRE(s.b.size() == 300);
  for (int i = 0; i + 3 <= 299; ++i) {
    CHECK(s.a[i + 3] == s.a[i]);
    CHECK(s.b[i + 3] == s.b[i]);
  }
  const auto r = sample_coefficients(CoefficientModel::periodic(PolyKind::Trig, 4), 41, 5);
  for (int i = 0; i <= 41; ++i) {
    CHECK(r.a[i] == r.a[i % 4]);
    CHECK(r.b[i] == r.b[i % 4]);
  }
}

TEST_CASE("sampling is deterministic and cosine samples have no sine part") {
  const auto m = CoefficientModel::iid(PolyKind::Trig);
  const auto x = sample_coefficients(m, 10, 1234);
  const auto y = sample_coefficients(m, 10, 1234);
  CHECK(x.a == y.a);
  CHECK(x.b == y.b);
  CHECK(x.seed == 1234);
  const auto c = sample_coefficients(CoefficientModel::periodic(PolyKind::Cosine, 2), 9, 3);
  for (double v : c.b) CHECK(v == 0.0);
  const auto ci = sample_coefficients(CoefficientModel::iid(PolyKind::Cosine), 9, 3);
  for (double v : ci.b) CHECK(v == 0.0);
}

TEST_CASE("sigma scales the coefficients") {
  const auto a = sample_coefficients(CoefficientModel::iid(PolyKind::Trig, 1.0), 20, 8);
  const auto b = sample_coefficients(CoefficientModel::iid(PolyKind::Trig, 3.0), 20, 8);
  for (int i = 0; i <= 20; ++i) CHECK(b.a[i] == doctest::Approx(3.0 * a.a[i]).epsilon(1e-15));
}

TEST_CASE("first coefficient over many seeds is N(0, sigma^2)") {
  const double sigma = 2.0;
  const auto model = CoefficientModel::iid(PolyKind::Trig, sigma);
  const int seeds = 100000;
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < seeds; ++i) {
    const double v = sample_coefficients(model, 1, trial_seed(77, 1, i)).a[0];
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1 / seeds;
  const double var = s2 / seeds - mean * mean;
  CHECK(std::abs(mean) < 4.0 * sigma / std::sqrt(seeds));
  CHECK(var == doctest::Approx(sigma * sigma).epsilon(0.05));
}

TEST_CASE("trial seeds from one master give distinct vectors") {
  std::set<std::vector<double>> seen;
  const auto model = CoefficientModel::periodic(PolyKind::Trig, 2);
  for (int t = 0; t < 10000; ++t) seen.insert(sample_coefficients(model, 5, trial_seed(1, 5, t)).a);
  CHECK(seen.size() == 10000);
}

TEST_CASE("make_sample and parsing") {
  const auto s = make_sample({1.0, 2.0}, {});
  CHECK(s.n == 1);
  CHECK(s.b == std::vector<double>{0.0, 0.0});
  CHECK_THROWS_AS(make_sample({1.0, 2.0}, {1.0}), ModelError);
  CHECK(parse_poly_kind("cosine") == PolyKind::Cosine);
  CHECK(parse_poly_kind("trig") == PolyKind::Trig);
  CHECK(parse_dependence("periodic") == Dependence::Periodic);
  CHECK_THROWS_AS(parse_poly_kind("sine"), ModelError);
  CHECK_THROWS_AS(parse_dependence("markov"), ModelError);
  CHECK(to_string(PolyKind::Cosine) == "cosine");
  CHECK(describe(CoefficientModel::periodic(PolyKind::Trig, 3)).find("3") != std::string::npos);
}
