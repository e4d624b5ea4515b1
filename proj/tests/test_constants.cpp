#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "trigzeros/constants.hpp"
#include "trigzeros/constants_cache.hpp"
#include "trigzeros/error.hpp"
#include "trigzeros/oracles.hpp"

using namespace trigzeros;
constexpr double kPi = std::numbers::pi;

TEST_CASE("known constant values") {
  CHECK(compute_C(2, 1).value == doctest::Approx(1.5238429977259313).epsilon(1e-12));
  CHECK(compute_C(3, 1).value == doctest::Approx(1.533470221543402).epsilon(1e-12));
  CHECK(compute_K(1).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(compute_C(5, 0).value == 1.0);
}

TEST_CASE("C is symmetric in r and ell - r and bounded") {
  for (int ell = 2; ell <= 7; ++ell) {
    for (int r = 1; r < ell; ++r) {
      const auto c = compute_C(ell, r);
      CHECK(c.abs_error_estimate < 1e-10);
      CHECK(c.value == doctest::Approx(compute_C(ell, ell - r).value).epsilon(1e-11));
      // Jensen with J = 1 gives C >= sqrt(2); at most 2n zeros gives C <= 2
      CHECK(c.value > std::sqrt(2.0));
      CHECK(c.value < 2.0);
    }
  }
}

TEST_CASE("J is one") {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int r = 1; r < ell; ++r) {
      CHECK(compute_J(ell, r).value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("I_alpha matches its closed form across alpha") {
  for (double alpha : {0.05, 0.3, kPi / 4, 1.0, 1.5}) {
    const auto r = compute_I_alpha(alpha);
    CHECK(r.value == doctest::Approx(i_alpha_closed_form(alpha)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(compute_I_alpha(0.0), ModelError);
  CHECK_THROWS_AS(compute_I_alpha(kPi / 2), ModelError);
}

TEST_CASE("Monte Carlo oracle agrees with the tensor rule") {
  const auto mc = monte_carlo_C(3, 2, 2000000, 17);
  const auto q = compute_C(3, 2);
  CHECK(std::abs(mc.value - q.value) <= 4.0 * mc.standard_error);
  const auto mk = monte_carlo_box([](double s, double t) { return s * t; }, 1.0, 2.0, 400000, 3);
  CHECK(std::abs(mk.value - 1.0) <= 4.0 * mk.standard_error);
}

TEST_CASE("companion identity") {
  for (double u : {-0.9, -0.3, 0.0, 0.5, 0.99}) {
    const auto c = companion_identity(u);
    CHECK(c.quadrature == doctest::Approx(c.closed_form).epsilon(1e-11));
  }
  CHECK_THROWS_AS(companion_identity(1.0), ModelError);
}

TEST_CASE("K is finite and above one half") {
  for (int ell : {2, 3, 8}) {
    const auto k = compute_K(ell);
    CHECK(std::isfinite(k.value));
    CHECK(k.value > 0.5);
  }
  CHECK(compute_K(2).value == doctest::Approx(1.064237446985979).epsilon(1e-10));
}

TEST_CASE("grid doubling shrinks the error") {
  ConstantGrid coarse;
  coarse.panels_per_axis = 8;
  coarse.nodes_per_panel = 6;
  const auto a = compute_C(4, 1, coarse);
  const auto b = compute_C(4, 1);
  CHECK(std::abs(a.value - b.value) <= 3.0 * a.abs_error_estimate + 1e-12);
  CHECK(b.abs_error_estimate < a.abs_error_estimate);
  CHECK(coarse.key() == "8x6g18r0.25");
  CHECK(coarse.doubled().panels_per_axis == 16);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(compute_C(1, 0), ModelError);
  CHECK_THROWS_AS(compute_C(3, 3), ModelError);
  CHECK_THROWS_AS(compute_J(3, 0), ModelError);
  CHECK_THROWS_AS(compute_K(0), ModelError);
}

TEST_CASE("theoretical means") {
  const auto iid = theoretical_mean(CoefficientModel::iid(PolyKind::Trig), 300);
  CHECK(iid.value == doctest::Approx(600.0 / std::sqrt(3.0)));
  CHECK(iid.order_tag == "o(n)");
  const auto r0 = theoretical_mean(CoefficientModel::periodic(PolyKind::Trig, 3), 299);
  CHECK(r0.order_tag == "exact");
  CHECK(r0.value == doctest::Approx(297.0 + std::sqrt(299.0 * 299.0 + 8.0 / 3.0)));
  const auto rn = theoretical_mean(CoefficientModel::periodic(PolyKind::Trig, 2), 300);
  CHECK(rn.value == doctest::Approx(300.0 * 1.5238429977259313));
  CHECK(rn.order_tag == "O(n^{4/5})");
  CHECK(theoretical_mean(CoefficientModel::periodic(PolyKind::Cosine, 1), 50).value == 100.0);
  CHECK(theoretical_mean(CoefficientModel::periodic(PolyKind::Cosine, 3), 299).order_tag ==
        "O(n^{2/3})");
  CHECK_THROWS_AS(theoretical_mean(CoefficientModel::periodic(PolyKind::Cosine, 3), 300),
                  ModelError);
  CHECK_THROWS_AS(theoretical_mean(CoefficientModel::iid(PolyKind::Trig), 0), ModelError);
}

TEST_CASE("constants cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "trigzeros_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("TRIGZEROS_CACHE", dir.c_str(), 1);
  ConstantGrid g;
  g.panels_per_axis = 8;
  const auto first = cached_C(5, 2, g);
  REQUIRE(std::filesystem::exists(dir / "constants.json"));
  std::ifstream in(dir / "constants.json");
  const auto j = nlohmann::json::parse(in);
  const auto key = ConstantsCache::key(5, 2, g);
  REQUIRE(j.contains(key));
  CHECK(j[key]["value"].get<double>() == first.value);

  // a doctored entry is served from disk
  ConstantsCache cache(dir);
  ConstantResult fake = first;
  fake.value = 42.0;
  cache.store(5, 2, fake);
  CHECK(cached_C(5, 2, g).value == 42.0);
  CHECK_FALSE(cache.lookup(5, 3, g).has_value());

  ::setenv("TRIGZEROS_CACHE", "", 1);
  CHECK_FALSE(ConstantsCache::from_environment().has_value());
  CHECK(cached_C(5, 2, g).value == first.value);
  ::unsetenv("TRIGZEROS_CACHE");
  std::filesystem::remove_all(dir);
}
