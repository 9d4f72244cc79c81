#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hawkes/errors.hpp"
#include "hawkes/specfun.hpp"
#include "oracles.hpp"

using hawkes::specfun::lower_incomplete_gamma;
using hawkes::specfun::mittag_leffler;
using hawkes::specfun::upper_incomplete_gamma;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST_CASE("mittag_leffler reduces to exp, cosh and the z = 0 term") {
  CHECK(rel_err(mittag_leffler({1.0, 1.0}, 1.0), std::numbers::e) < 1e-14);
  CHECK(rel_err(mittag_leffler({2.0, 1.0}, 1.0), std::cosh(1.0)) < 1e-14);
  CHECK(rel_err(mittag_leffler({2.0, 1.0}, 1.0), oracle::mittag_leffler(2.0, 1.0, 1.0)) < 1e-15);
  CHECK(rel_err(mittag_leffler({0.5, 0.5}, 0.0), 1.0 / std::tgamma(0.5)) < 1e-15);
}

TEST_CASE("mittag_leffler(1, 1, z) matches exp on [-20, 20]") {
  for (double z = -20.0; z <= 20.0; z += 0.25) {
    CAPTURE(z);
    CHECK(rel_err(mittag_leffler({1.0, 1.0}, z), std::exp(z)) < 1e-12);
  }
}

TEST_CASE("mittag_leffler(2, 1, z) matches cosh(sqrt z) for z >= 0") {
  for (double z : {0.1, 2.0, 50.0, 1000.0, 1e4}) {
    CAPTURE(z);
    CHECK(rel_err(mittag_leffler({2.0, 1.0}, z), std::cosh(std::sqrt(z))) < 1e-9);
  }
}

TEST_CASE("mittag_leffler agrees with a 100-digit series across regimes") {
  struct Case {
    double alpha, beta, z, tol;
  };
  const Case cases[] = {
      {0.6, 0.6, 0.1, 1e-12},  {0.6, 1.6, 0.1, 1e-12},  {0.6, 2.6, 3.0, 1e-12},
      {0.6, 0.6, 8.0, 1e-12},  {0.6, 0.6, 12.0, 1e-9},  {0.6, 1.6, 15.0, 1e-9},
      {1.5, 1.5, 200.0, 1e-9}, {2.0, 3.0, 300.0, 1e-9}, {0.6, 1.0, -0.5, 1e-12},
      {0.6, 1.0, -10.0, 1e-9}, {0.6, 0.6, -5.0, 1e-9},  {1.2, 1.0, -30.0, 1e-9},
      {0.3, 1.3, 1.5, 1e-12},
  };
  for (const Case& c : cases) {
    CAPTURE(c.alpha);
    CAPTURE(c.beta);
    CAPTURE(c.z);
    const double want = oracle::mittag_leffler(c.alpha, c.beta, c.z);
    CHECK(std::abs(mittag_leffler({c.alpha, c.beta}, c.z) - want) <= c.tol * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("mittag_leffler large negative argument uses the algebraic tail") {
  // E_{1/2,1}(-x) = exp(x^2) erfc(x).
  for (double x : {5.0, 10.0, 30.0, 100.0}) {
    CAPTURE(x);
    CHECK(rel_err(mittag_leffler({0.5, 1.0}, -x), oracle::scaled_erfc(x)) < 1e-9);
  }
}

TEST_CASE("mittag_leffler is continuous in z") {
  for (double z = -15.0; z < 40.0; z += 0.37) {
    const double a = mittag_leffler({0.6, 0.6}, z);
    const double b = mittag_leffler({0.6, 0.6}, z + 1e-7);
    CAPTURE(z);
    CHECK(std::abs(b - a) <= 1e-4 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("mittag_leffler errors") {
  CHECK_THROWS_AS(mittag_leffler({1.0, 1.0}, std::numeric_limits<double>::infinity()), hawkes::DomainError);
  CHECK_THROWS_AS(mittag_leffler({1.0, 1.0}, std::nan("")), hawkes::DomainError);
  CHECK_THROWS_AS(mittag_leffler({0.0, 1.0}, 1.0), hawkes::DomainError);
  CHECK_THROWS_AS(mittag_leffler({2.5, 1.0}, 1.0), hawkes::DomainError);
  CHECK_THROWS_AS(mittag_leffler({0.5, 1.0}, 1e6), hawkes::OverflowError);
}

TEST_CASE("lower_incomplete_gamma examples") {
  CHECK(rel_err(lower_incomplete_gamma(1.0, 1.0), 1.0 - std::exp(-1.0)) < 1e-14);
  CHECK(lower_incomplete_gamma(3.7, 0.0) == 0.0);
  // Oracle: integrate s e^{-s} over [0, 2] numerically.
  const double quad = oracle::integrate([](double s) { return s * std::exp(-s); }, 0.0, 2.0);
  CHECK(std::abs(lower_incomplete_gamma(2.0, 2.0) - quad) < 1e-12);
  CHECK(std::abs(lower_incomplete_gamma(2.0, 2.0) - (1.0 - 3.0 * std::exp(-2.0))) < 1e-14);
  CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), hawkes::DomainError);
  CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 1.0), hawkes::DomainError);
}

TEST_CASE("lower_incomplete_gamma matches boost and is monotone and bounded") {
  for (double a : {0.1, 0.6, 1.0, 2.0, 3.6, 10.0, 40.0}) {
    double prev = 0.0;
    for (double x = 0.0; x <= 80.0; x += 0.5) {
      const double p = lower_incomplete_gamma(a, x);
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::abs(p - oracle::gamma_p(a, x)) < 1e-13);
      CHECK(p >= prev);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
}

TEST_CASE("lower_incomplete_gamma recurrence P(a+1, x) = P(a, x) - x^a e^-x / Gamma(a+1)") {
  for (double a : {0.3, 0.6, 1.7, 4.2}) {
    for (double x : {0.05, 0.9, 3.0, 7.5, 20.0}) {
      const double lhs = lower_incomplete_gamma(a + 1.0, x);
      const double rhs = lower_incomplete_gamma(a, x) - std::pow(x, a) * std::exp(-x) / std::tgamma(a + 1.0);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("upper_incomplete_gamma keeps relative accuracy in the tail") {
  for (double a : {0.6, 2.0, 5.0}) {
    for (double x : {30.0, 60.0, 100.0}) {
      CHECK(rel_err(upper_incomplete_gamma(a, x), boost::math::gamma_q(a, x)) < 1e-12);
    }
  }
}
