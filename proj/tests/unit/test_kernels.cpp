#include <doctest.h>

#include <cmath>

#include "hawkes/errors.hpp"
#include "hawkes/kernels.hpp"
#include "oracles.hpp"

using namespace hawkes;

namespace {

double quad_kernel(const KernelSpec& k, double a, double b) {
  return oracle::integrate([&](double s) { return kernel_eval(k, s); }, a, b);
}

std::vector<KernelSpec> catalog() {
  return {
      KernelSpec::exponential(0.5, 1.0),
      KernelSpec::exponential(2.0, -0.5),
      KernelSpec::fractional(0.1, 0.6),
      KernelSpec::fractional(0.7, 1.4),
      KernelSpec::gamma(8.1, 3.0, 2.0),
      KernelSpec::gamma(0.5, 1.5, 0.7),
      KernelSpec::mittag_leffler(0.1, 0.1, 0.6),
      KernelSpec::mittag_leffler(0.3, 0.8, 1.3),
      KernelSpec::tempered_mittag_leffler(8.1, 8.1, 3.0, 2.0),
      KernelSpec::tempered_mittag_leffler(0.5, 0.9, 1.5, 0.7),
      KernelSpec::sum_of_exponentials({1.0, 0.5}, {2.0, 7.0}),
  };
}

}  // namespace

TEST_CASE("kernel_eval examples") {
  CHECK(kernel_eval(KernelSpec::exponential(2.0, 3.0), 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kernel_eval(KernelSpec::fractional(1.0, 0.6), 1.0) ==
        doctest::Approx(1.0 / boost::math::tgamma(0.6)).epsilon(1e-14));
  CHECK(kernel_eval(KernelSpec::gamma(0.9 * 9.0, 3.0, 2.0), 1.0) ==
        doctest::Approx(8.1 * std::exp(-3.0)).epsilon(1e-14));
  CHECK(kernel_eval(KernelSpec::sum_of_exponentials({1.0, 2.0}, {1.0, 3.0}), 0.5) ==
        doctest::Approx(std::exp(-0.5) + 2.0 * std::exp(-1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(kernel_eval(KernelSpec::fractional(1.0, 0.6), 0.0), DomainError);
  CHECK_THROWS_AS(kernel_eval(KernelSpec::exponential(1.0, 1.0), -1.0), DomainError);
}

TEST_CASE("kernel spec validation") {
  CHECK_THROWS_AS(KernelSpec::exponential(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(KernelSpec::fractional(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(KernelSpec::gamma(1.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(KernelSpec::sum_of_exponentials({}, {}), DomainError);
  CHECK_THROWS_AS(KernelSpec::sum_of_exponentials({1.0, 0.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(KernelSpec::sum_of_exponentials({1.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(KernelSpec::fractional_hurst(1.0, 1.2), DomainError);
  const auto* f = std::get_if<FractionalKernel>(&KernelSpec::fractional_hurst(0.1, 0.1).params());
  REQUIRE(f != nullptr);
  CHECK(f->alpha == doctest::Approx(0.6));
  CHECK(KernelSpec::zero().is_zero());
  CHECK(KernelSpec::fractional(0.1, 0.6).singular_at_zero());
  CHECK_FALSE(KernelSpec::gamma(1.0, 1.0, 2.0).singular_at_zero());
}

TEST_CASE("integrated_kernel examples") {
  CHECK(integrated_kernel(KernelSpec::exponential(1.0, 1.0), 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  for (const KernelSpec& k : catalog()) {
    CHECK(integrated_kernel(k, 0.0) == 0.0);
  }
  // Quadrature over the singular integrand s^{-0.4}.
  const KernelSpec frac = KernelSpec::fractional(0.1, 0.6);
  const double q = quad_kernel(frac, 0.0, 1.0);
  CHECK(integrated_kernel(frac, 1.0) == doctest::Approx(q).epsilon(1e-10));
  CHECK(integrated_kernel(frac, 1.0) == doctest::Approx(0.1 / boost::math::tgamma(1.6)).epsilon(1e-14));
}

TEST_CASE("integrated_kernel matches quadrature of kernel_eval for every family") {
  for (const KernelSpec& k : catalog()) {
    for (double t : {0.01, 0.3, 1.0, 2.5}) {
      CAPTURE(k.describe());
      CAPTURE(t);
      const double want = quad_kernel(k, 0.0, t);
      CHECK(std::abs(integrated_kernel(k, t) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("integrated_kernel is nondecreasing and interval integrals telescope") {
  for (const KernelSpec& k : catalog()) {
    if (k.family() == KernelFamily::Exponential) continue;  // includes a growing kernel; fine either way
    double prev = 0.0;
    for (double t = 0.0; t <= 3.0; t += 0.01) {
      const double v = integrated_kernel(k, t);
      CHECK(v >= prev);
      prev = v;
    }
  }
  for (const KernelSpec& k : catalog()) {
    CAPTURE(k.describe());
    const double a = 0.37;
    const double b = 1.91;
    CHECK(interval_integral(k, a, b) ==
          doctest::Approx(integrated_kernel(k, b) - integrated_kernel(k, a)).epsilon(1e-12));
  }
}

TEST_CASE("double_integrated_kernel matches quadrature of the integrated kernel") {
  for (const KernelSpec& k : catalog()) {
    for (double t : {1e-3, 0.4, 2.0}) {
      CAPTURE(k.describe());
      CAPTURE(t);
      const double want = oracle::integrate([&](double s) { return integrated_kernel(k, s); }, 0.0, t);
      CHECK(std::abs(double_integrated_kernel(k, t) - want) <= 1e-11 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("custom kernels fall back to quadrature") {
  CustomKernel ck;
  ck.eval = [](double t) { return 0.5 * std::exp(-t) * (1.0 + t); };
  const KernelSpec k = KernelSpec::custom(ck);
  const double want = 0.5 * (2.0 - std::exp(-1.0) * 3.0);
  CHECK(integrated_kernel(k, 1.0) == doctest::Approx(want).epsilon(1e-10));
  CHECK_FALSE(has_resolvent(k));
  CHECK_THROWS_AS(resolvent_of(k), UnsupportedError);
  CHECK_THROWS_AS(kernel_envelope(k, 0.0, 1.0), ConfigError);
}

TEST_CASE("grid_weights examples") {
  const Grid z = grid_weights(KernelSpec::zero(), 3.0, 7);
  for (double w : z.weights) CHECK(w == 0.0);

  const Grid g = grid_weights(KernelSpec::exponential(1.0, 1.0), 1.0, 2);
  REQUIRE(g.weights.size() == 2);
  CHECK(g.weights[0] == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-15));
  CHECK(g.weights[1] == doctest::Approx(std::exp(-0.5) - std::exp(-1.0)).epsilon(1e-15));
  CHECK(g.weights[0] == doctest::Approx(0.393469).epsilon(1e-6));
  CHECK(g.weights[1] == doctest::Approx(0.238651).epsilon(1e-6));
  CHECK(g.weights[0] == doctest::Approx(quad_kernel(KernelSpec::exponential(1.0, 1.0), 0.0, 0.5)));
}

TEST_CASE("exponential weights follow the geometric recursion") {
  const double b = 5.0;
  const Grid g = grid_weights(KernelSpec::exponential(4.0, b), 2.0, 1000);
  const double ratio = std::exp(-b * 2.0 / 1000);
  for (std::size_t j = 0; j + 1 < g.weights.size(); ++j) {
    CHECK(std::abs(g.weights[j + 1] / g.weights[j] - ratio) < 1e-14);
  }
}

TEST_CASE("grid weights sum to the integrated kernel") {
  for (const KernelSpec& k : catalog()) {
    const Grid g = grid_weights(k, 1.0, 512);
    double s = 0.0;
    for (double w : g.weights) s += w;
    CAPTURE(k.describe());
    CHECK(std::abs(s - integrated_kernel(k, 1.0)) < 1e-12);
  }
}

TEST_CASE("grid_weights rejects k0 >= 1") {
  CHECK_THROWS_AS(grid_weights(KernelSpec::exponential(4.0, 0.0), 1.0, 2), WellPosednessError);
  CHECK_NOTHROW(grid_weights(KernelSpec::exponential(4.0, 0.0), 1.0, 5));
}

TEST_CASE("resolvent_of catalog") {
  const KernelSpec re = resolvent_of(KernelSpec::exponential(0.5, 1.0));
  const auto* e = std::get_if<ExponentialKernel>(&re.params());
  REQUIRE(e != nullptr);
  CHECK(e->c == 0.5);
  CHECK(e->b == 0.5);

  const KernelSpec r = resolvent_of(KernelSpec::fractional(0.1, 0.6));
  REQUIRE(r.family() == KernelFamily::MittagLeffler);
  for (double t : {0.1, 1.0, 5.0}) {
    const double want = 0.1 * std::pow(t, -0.4) * oracle::mittag_leffler(0.6, 0.6, 0.1 * std::pow(t, 0.6));
    CHECK(kernel_eval(r, t) == doctest::Approx(want).epsilon(1e-12));
  }
  const KernelSpec rr = resolvent_of(KernelSpec::mittag_leffler(0.1, 0.1, 0.6));
  const auto* ml = std::get_if<MittagLefflerKernel>(&rr.params());
  REQUIRE(ml != nullptr);
  CHECK(ml->rate == doctest::Approx(0.2));
  CHECK(resolvent_of(KernelSpec::gamma(1.0, 2.0, 1.5)).family() == KernelFamily::TemperedMittagLeffler);
  CHECK_THROWS_AS(resolvent_of(KernelSpec::sum_of_exponentials({1.0}, {1.0})), UnsupportedError);
}

TEST_CASE("exponential resolvent identity in L1 via a fine discrete convolution") {
  const KernelSpec k = KernelSpec::exponential(0.5, 1.0);
  const KernelSpec r = resolvent_of(k);
  const int n = 10000;
  const double h = 1.0 / n;
  std::vector<double> kv(n + 1);
  std::vector<double> rv(n + 1);
  for (int i = 0; i <= n; ++i) {
    kv[i] = kernel_eval(k, i * h);
    rv[i] = kernel_eval(r, i * h);
  }
  // Simpson-weighted convolution on each even grid point, trapezoid L1 norm.
  double l1 = 0.0;
  double prev = 0.0;
  for (int i = 2; i <= n; i += 2) {
    double conv = 0.0;
    for (int j = 0; j <= i; ++j) {
      const double wgt = (j == 0 || j == i) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      conv += wgt * rv[i - j] * kv[j];
    }
    conv *= h / 3.0;
    const double err = std::abs(conv - (rv[i] - kv[i]));
    l1 += 0.5 * (prev + err) * 2.0 * h;
    prev = err;
  }
  CHECK(l1 < 1e-8);
}

TEST_CASE("resolvent_grid_weights examples") {
  const Grid g = resolvent_grid_weights(KernelSpec::exponential(0.5, 1.0), 1.0, 1);
  CHECK(g.kind == GridKind::Resolvent);
  CHECK(g.weights[0] == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-15));
  CHECK(g.weights[0] == doctest::Approx(0.393469).epsilon(1e-6));
  for (double w : resolvent_grid_weights(KernelSpec::fractional(0.0, 0.6), 1.0, 4).weights) CHECK(w == 0.0);
  const Grid f = resolvent_grid_weights(KernelSpec::fractional(0.1, 0.6), 1.0, 1);
  CHECK(f.weights[0] == doctest::Approx(0.1 * oracle::mittag_leffler(0.6, 1.6, 0.1)).epsilon(1e-13));
}

TEST_CASE("tempered resolvent integral converges when c / b^alpha >= 1") {
  // Gamma kernel with c / b^alpha = 2: the tempered series has ratio (rate/b^alpha) t-dependent terms
  // but stays summable for finite t.
  const KernelSpec k = KernelSpec::gamma(18.0, 3.0, 2.0);
  const KernelSpec r = resolvent_of(k);
  for (double t : {0.2, 1.0, 3.0}) {
    const double want = quad_kernel(r, 0.0, t);
    CHECK(integrated_kernel(r, t) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("g0r_increments examples") {
  for (double v : g0r_increments(Baseline::constant(0.0), KernelSpec::exponential(0.5, 1.0), 1.0, 5)) {
    CHECK(v == 0.0);
  }
  for (double v : g0r_increments(Baseline::constant(5.0), KernelSpec::zero(), 1.0, 10)) {
    CHECK(v == doctest::Approx(0.5).epsilon(1e-15));
  }
  const auto one = g0r_increments(Baseline::constant(1.0), KernelSpec::exponential(0.5, 1.0), 1.0, 1);
  // 1 + int_0^1 (1 - e^{-s/2}) ds = 2 - 2(1 - e^{-1/2}) ... evaluated symbolically.
  const double want = 1.0 + (1.0 - 2.0 * (1.0 - std::exp(-0.5)));
  CHECK(one[0] == doctest::Approx(want).epsilon(1e-14));
  CHECK(one[0] == doctest::Approx(1.213061).epsilon(1e-6));
}

TEST_CASE("g0r for a custom baseline matches the constant closed form") {
  CustomBaseline cb;
  cb.rate = [](double) { return 2.0; };
  cb.integrated = [](double t) { return 2.0 * t; };
  const Baseline g = Baseline::custom(cb);
  const KernelSpec k = KernelSpec::fractional(0.1, 0.6);
  const auto a = g0r_increments(g, k, 3.0, 6);
  const auto b = g0r_increments(Baseline::constant(2.0), k, 3.0, 6);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-8));
}

TEST_CASE("inverse_integrated_kernel inverts Kbar") {
  for (const KernelSpec& k : catalog()) {
    if (k.family() == KernelFamily::Exponential) {
      const auto& e = std::get<ExponentialKernel>(k.params());
      if (e.b < 0.0) continue;
    }
    const double upper = 2.0;
    const double total = integrated_kernel(k, upper);
    for (double f : {0.01, 0.3, 0.77, 0.999}) {
      const double s = inverse_integrated_kernel(k, f * total, upper);
      CAPTURE(k.describe());
      CHECK(integrated_kernel(k, s) == doctest::Approx(f * total).epsilon(1e-9));
    }
    CHECK(inverse_integrated_kernel(k, 2.0 * total, upper) == upper);
  }
}

TEST_CASE("kernel_envelope dominates the kernel and is nonincreasing") {
  const double horizon = 4.0;
  for (const KernelSpec& k : {KernelSpec::exponential(0.5, 1.0), KernelSpec::exponential(0.5, -0.3),
                              KernelSpec::fractional(0.1, 0.6), KernelSpec::fractional(0.3, 1.5),
                              KernelSpec::gamma(8.1, 3.0, 2.0), KernelSpec::gamma(1.0, 1.0, 0.5)}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double t = 0.01; t <= horizon; t += 0.01) {
      const double env = kernel_envelope(k, t, horizon);
      double sup = 0.0;
      for (double s = t; s <= horizon; s += 0.01) sup = std::max(sup, kernel_eval(k, s));
      CAPTURE(k.describe());
      CAPTURE(t);
      CHECK(env >= sup * (1.0 - 1e-12));
      CHECK(env <= prev);
      prev = env;
    }
  }
  CHECK_THROWS_AS(kernel_envelope(KernelSpec::mittag_leffler(0.1, 0.1, 0.6), 0.1, 1.0), ConfigError);
}

TEST_CASE("baseline helpers") {
  const Baseline g = Baseline::constant(5.0);
  for (double v : g.increments(1.0, 10)) CHECK(v == 0.5);
  CHECK(g.inverse_integrated(2.5, 1.0) == 0.5);
  CHECK_THROWS_AS(Baseline::constant(-1.0), DomainError);
  CustomBaseline cb;
  cb.rate = [](double t) { return 1.0 + t; };
  cb.integrated = [](double t) { return t + 0.5 * t * t; };
  const Baseline h = Baseline::custom(cb);
  CHECK(h.inverse_integrated(1.5, 2.0) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS((void)h.running_max(0.0, 1.0), UnsupportedError);
}
