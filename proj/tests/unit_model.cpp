#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vss/errors.hpp"
#include "vss/model.hpp"

using namespace vss;

TEST_CASE("derived exponents for the reference parameter sets") {
  SimilarityParams a{.n = 1.0, .p = 3.0, .N = 1};
  auto da = derive_exponents(a);
  CHECK(da.beta == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(da.alpha == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(da.p0 == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(da.mu.has_value());
  CHECK(*da.mu == doctest::Approx(3.0));
  CHECK(da.subcritical);

  SimilarityParams b{.n = 0.0, .p = 1.7, .N = 1};
  auto db = derive_exponents(b);
  CHECK(db.p0 == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_FALSE(db.mu.has_value());
  CHECK(db.subcritical);
}

TEST_CASE("beta vanishes on the lower boundary p = n+1") {
  SimilarityParams s{.n = 1.0, .p = 2.0, .N = 1};
  auto d = derive_exponents(s);
  CHECK(d.beta == 0.0);
  CHECK_FALSE(d.subcritical);
}

TEST_CASE("beta at the top of the range equals 1/(4+nN) exactly") {
  for (double n : {0.0, 0.5, 1.0, 1.37, 2.0}) {
    for (int N : {1, 2, 3, 5}) {
      SimilarityParams s{.n = n, .p = 0.0, .N = N};
      s.p = 1.0 + n + 4.0 / N;
      auto d = derive_exponents(s);
      CHECK(d.beta == 1.0 / (4.0 + n * N));
      CHECK_FALSE(d.subcritical);
    }
  }
}

TEST_CASE("negative n is accepted and flagged as fast diffusion") {
  SimilarityParams s{.n = -0.5, .p = 2.0, .N = 1};
  CHECK(s.fast_diffusion());
  auto d = derive_exponents(s);
  CHECK(d.mu.has_value());
  CHECK(*d.mu == doctest::Approx(-6.0));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(derive_exponents({.n = 1.0, .p = 0.5, .N = 1}), Error);
  CHECK_THROWS_AS(derive_exponents({.n = 1.0, .p = 1.0, .N = 1}), Error);
  CHECK_THROWS_AS(derive_exponents({.n = 1.0, .p = 3.0, .N = 0}), Error);
  SimilarityParams bad_eps{.n = 1.0, .p = 3.0, .N = 1};
  bad_eps.eps = 0.0;
  CHECK_THROWS_AS(derive_exponents(bad_eps), Error);
}

TEST_CASE("semilinear bifurcation points for N=1 down to 1.7") {
  auto pl = bifurcation_points_semilinear(1, 1.7);
  REQUIRE(pl.size() == 5);
  CHECK(pl[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(pl[1] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(pl[2] == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(pl[3] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pl[4] == doctest::Approx(9.0 / 5.0).epsilon(1e-15));
}

TEST_CASE("semilinear bifurcation points, other cutoffs") {
  auto one = bifurcation_points_semilinear(4, 1.9);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(2.0).epsilon(1e-15));

  CHECK(bifurcation_points_semilinear(1, 5.0).empty());
  CHECK(bifurcation_points_semilinear(1, 6.5).empty());
}

TEST_CASE("critical exponents from alpha invert the semilinear list") {
  for (int N : {1, 2, 3, 6}) {
    std::vector<double> alphas;
    for (int l = 0; l <= 20; ++l) alphas.push_back((N + l) / 4.0);
    auto ps = critical_exponents_from_alpha(alphas, 0.0);
    for (int l = 0; l <= 20; ++l)
      CHECK(ps[l] == doctest::Approx(1.0 + 4.0 / (N + l)).epsilon(1e-14));
  }
}

TEST_CASE("critical exponents reject alpha outside (0, 1/n)") {
  CHECK_THROWS_AS(critical_exponents_from_alpha({-0.25}, 0.0), Error);
  CHECK_THROWS_AS(critical_exponents_from_alpha({0.0}, 0.0), Error);
  CHECK_THROWS_AS(critical_exponents_from_alpha({1.1}, 1.0), Error);
  auto ok = critical_exponents_from_alpha({0.5}, 1.0);
  CHECK(ok[0] == doctest::Approx(3.0));
}
