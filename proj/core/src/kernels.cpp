#include "hawkes/kernels.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <type_traits>

#include "hawkes/errors.hpp"
#include "hawkes/specfun.hpp"

namespace hawkes {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kQuadratureTol = 1e-10;
constexpr double kInverseTol = 1e-12;
constexpr int kMaxSeriesTerms = 10'000;

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError("kernel: " + what);
  }
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

// (1 - e^{-x}) / x, continuous at 0.
double phi1(double x) {
  if (std::abs(x) < 1e-8) {
    return 1.0 - x / 2.0;
  }
  return -std::expm1(-x) / x;
}

// (x - (1 - e^{-x})) / x^2, continuous at 0.
double phi2(double x) {
  if (std::abs(x) < 1e-2) {
    // 1/2 - x/6 + x^2/24 - x^3/120 + x^4/720 - x^5/5040
    return 0.5 + x * (-1.0 / 6 + x * (1.0 / 24 + x * (-1.0 / 120 + x * (1.0 / 720 - x / 5040))));
  }
  return (x + std::expm1(-x)) / (x * x);
}

double exp_integrated(const ExponentialKernel& k, double t) { return k.c * t * phi1(k.b * t); }

double exp_interval(const ExponentialKernel& k, double a, double width) {
  return k.c * std::exp(-k.b * a) * width * phi1(k.b * width);
}

double exp_double_integrated(const ExponentialKernel& k, double t) {
  return k.c * t * t * phi2(k.b * t);
}

// Sum over n >= 0 of coef_n * f(alpha (n + 1)), coef_n = c rate^n / b^(alpha (n+1)).
template <class F>
double tempered_series(const TemperedMittagLefflerKernel& k, F&& f) {
  const double scale = std::pow(k.b, -k.alpha);
  double coef = k.c * scale;
  const double ratio = k.rate * scale;
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 0;; ++n) {
    if (n >= kMaxSeriesTerms) {
      throw DomainError("tempered Mittag-Leffler series did not converge within 10000 terms");
    }
    const double term = coef * f(k.alpha * (n + 1));
    sum += term;
    const double mag = std::abs(term);
    if ((mag <= 1e-16 * std::abs(sum) && mag <= prev) || coef == 0.0 || ratio == 0.0) {
      break;
    }
    prev = mag;
    coef *= ratio;
  }
  return sum;
}

double quad(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) {
    return 0.0;
  }
  double err = 0.0;
  const double tol = kQuadratureTol / std::max(1.0, b - a);
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol, &err);
}

double custom_integrated(const CustomKernel& k, double t) {
  if (k.integrated) {
    return k.integrated(t);
  }
  return quad(k.eval, 0.0, t);
}

void check_time(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + ": time must be finite and nonnegative");
  }
}

}  // namespace

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Exponential: return "exponential";
    case KernelFamily::Fractional: return "fractional";
    case KernelFamily::Gamma: return "gamma";
    case KernelFamily::MittagLeffler: return "mittag_leffler";
    case KernelFamily::TemperedMittagLeffler: return "tempered_mittag_leffler";
    case KernelFamily::SumOfExponentials: return "sum_of_exponentials";
    case KernelFamily::Custom: return "custom";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// KernelSpec
// ---------------------------------------------------------------------------

KernelSpec KernelSpec::exponential(double c, double b) {
  require(finite_nonneg(c), "amplitude c must be finite and >= 0");
  require(std::isfinite(b), "decay b must be finite");
  return KernelSpec(ExponentialKernel{c, b});
}

KernelSpec KernelSpec::fractional(double c, double alpha) {
  require(finite_nonneg(c), "amplitude c must be finite and >= 0");
  require(alpha > 0.0 && std::isfinite(alpha), "shape alpha must be positive");
  return KernelSpec(FractionalKernel{c, alpha});
}

KernelSpec KernelSpec::fractional_hurst(double c, double hurst) {
  require(hurst > 0.0 && hurst < 1.0, "Hurst index must lie in (0, 1)");
  return fractional(c, hurst + 0.5);
}

KernelSpec KernelSpec::gamma(double c, double b, double alpha) {
  require(finite_nonneg(c), "amplitude c must be finite and >= 0");
  require(b > 0.0 && std::isfinite(b), "gamma kernel needs b > 0");
  require(alpha > 0.0 && std::isfinite(alpha), "shape alpha must be positive");
  return KernelSpec(GammaKernel{c, b, alpha});
}

KernelSpec KernelSpec::mittag_leffler(double c, double rate, double alpha) {
  require(finite_nonneg(c), "amplitude c must be finite and >= 0");
  require(finite_nonneg(rate), "rate must be finite and >= 0");
  require(alpha > 0.0 && alpha <= 2.0, "Mittag-Leffler kernel needs 0 < alpha <= 2");
  return KernelSpec(MittagLefflerKernel{c, rate, alpha});
}

KernelSpec KernelSpec::tempered_mittag_leffler(double c, double rate, double b, double alpha) {
  require(finite_nonneg(c), "amplitude c must be finite and >= 0");
  require(finite_nonneg(rate), "rate must be finite and >= 0");
  require(b > 0.0 && std::isfinite(b), "tempered Mittag-Leffler kernel needs b > 0");
  require(alpha > 0.0 && alpha <= 2.0, "Mittag-Leffler kernel needs 0 < alpha <= 2");
  return KernelSpec(TemperedMittagLefflerKernel{c, rate, b, alpha});
}

KernelSpec KernelSpec::sum_of_exponentials(std::vector<double> c, std::vector<double> b) {
  require(!c.empty(), "sum of exponentials needs at least one factor");
  require(c.size() == b.size(), "sum of exponentials: c and b must have equal length");
  for (std::size_t i = 0; i < c.size(); ++i) {
    require(c[i] > 0.0 && std::isfinite(c[i]), "sum of exponentials: every c_k must be > 0");
    require(b[i] > 0.0 && std::isfinite(b[i]), "sum of exponentials: every b_k must be > 0");
  }
  return KernelSpec(SumOfExponentialsKernel{std::move(c), std::move(b)});
}

KernelSpec KernelSpec::custom(CustomKernel kernel) {
  require(static_cast<bool>(kernel.eval), "custom kernel needs a pointwise evaluator");
  return KernelSpec(std::move(kernel));
}

KernelSpec KernelSpec::zero() { return exponential(0.0, 0.0); }

KernelFamily KernelSpec::family() const {
  return static_cast<KernelFamily>(params_.index());
}

bool KernelSpec::is_zero() const {
  return std::visit(Overloaded{
                        [](const SumOfExponentialsKernel&) { return false; },
                        [](const CustomKernel&) { return false; },
                        [](const auto& k) { return k.c == 0.0; },
                    },
                    params_);
}

bool KernelSpec::singular_at_zero() const {
  return std::visit(Overloaded{
                        [](const ExponentialKernel&) { return false; },
                        [](const SumOfExponentialsKernel&) { return false; },
                        [](const CustomKernel& k) { return k.singular_at_zero; },
                        [](const auto& k) { return k.c > 0.0 && k.alpha < 1.0; },
                    },
                    params_);
}

std::string KernelSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const ExponentialKernel& k) { os << "exponential(c=" << k.c << ", b=" << k.b << ")"; },
                 [&](const FractionalKernel& k) {
                   os << "fractional(c=" << k.c << ", alpha=" << k.alpha << ")";
                 },
                 [&](const GammaKernel& k) {
                   os << "gamma(c=" << k.c << ", b=" << k.b << ", alpha=" << k.alpha << ")";
                 },
                 [&](const MittagLefflerKernel& k) {
                   os << "mittag_leffler(c=" << k.c << ", rate=" << k.rate << ", alpha=" << k.alpha << ")";
                 },
                 [&](const TemperedMittagLefflerKernel& k) {
                   os << "tempered_mittag_leffler(c=" << k.c << ", rate=" << k.rate << ", b=" << k.b
                      << ", alpha=" << k.alpha << ")";
                 },
                 [&](const SumOfExponentialsKernel& k) { os << "sum_of_exponentials(m=" << k.c.size() << ")"; },
                 [&](const CustomKernel&) { os << "custom"; },
             },
             params_);
  return os.str();
}

// ---------------------------------------------------------------------------
// Baseline
// ---------------------------------------------------------------------------

Baseline Baseline::constant(double mu) {
  if (!finite_nonneg(mu)) {
    throw DomainError("baseline: constant rate must be finite and >= 0");
  }
  Baseline g;
  g.mu_ = mu;
  return g;
}

Baseline Baseline::custom(CustomBaseline baseline) {
  if (!baseline.rate || !baseline.integrated) {
    throw DomainError("baseline: custom baseline needs both g0 and its exact integral G0");
  }
  Baseline g;
  g.custom_ = std::make_shared<const CustomBaseline>(std::move(baseline));
  return g;
}

double Baseline::rate(double t) const { return custom_ ? custom_->rate(t) : mu_; }

double Baseline::integrated(double t) const { return custom_ ? custom_->integrated(t) : mu_ * t; }

double Baseline::inverse_integrated(double x, double horizon) const {
  if (!custom_) {
    return mu_ > 0.0 ? std::min(x / mu_, horizon) : horizon;
  }
  if (custom_->inverse_integrated) {
    return custom_->inverse_integrated(x);
  }
  if (x >= integrated(horizon)) {
    return horizon;
  }
  double lo = 0.0;
  double hi = horizon;
  while (hi - lo > kInverseTol) {
    const double mid = 0.5 * (lo + hi);
    (integrated(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double Baseline::running_max(double t, double horizon) const {
  if (!custom_) {
    return mu_;
  }
  if (!custom_->running_max) {
    throw UnsupportedError("baseline: thinning needs a running maximum for custom baselines");
  }
  return custom_->running_max(t, horizon);
}

std::vector<double> Baseline::increments(double horizon, std::size_t steps) const {
  std::vector<double> out(steps);
  if (!custom_) {
    std::fill(out.begin(), out.end(), mu_ * horizon / static_cast<double>(steps));
    return out;
  }
  double prev = integrated(0.0);
  for (std::size_t i = 0; i < steps; ++i) {
    const double next = integrated(horizon * static_cast<double>(i + 1) / static_cast<double>(steps));
    out[i] = next - prev;
    prev = next;
  }
  return out;
}

std::string Baseline::describe() const {
  if (custom_) {
    return "custom";
  }
  std::ostringstream os;
  os.precision(17);
  os << "constant(mu=" << mu_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Pointwise and integrated kernels
// ---------------------------------------------------------------------------

double kernel_eval(const KernelSpec& spec, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("kernel_eval: time must be finite and nonnegative");
  }
  if (t == 0.0 && spec.singular_at_zero()) {
    throw DomainError("kernel_eval: kernel is singular at t = 0");
  }
  return std::visit(
      Overloaded{
          [t](const ExponentialKernel& k) { return k.c * std::exp(-k.b * t); },
          [t](const FractionalKernel& k) {
            if (k.c == 0.0) return 0.0;
            return k.c * std::pow(t, k.alpha - 1.0) / std::tgamma(k.alpha);
          },
          [t](const GammaKernel& k) {
            if (k.c == 0.0) return 0.0;
            return k.c * std::exp(-k.b * t) * std::pow(t, k.alpha - 1.0) / std::tgamma(k.alpha);
          },
          [t](const MittagLefflerKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double ta = std::pow(t, k.alpha);
            return k.c * std::pow(t, k.alpha - 1.0) *
                   specfun::mittag_leffler({k.alpha, k.alpha}, k.rate * ta);
          },
          [t](const TemperedMittagLefflerKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double ta = std::pow(t, k.alpha);
            return k.c * std::exp(-k.b * t) * std::pow(t, k.alpha - 1.0) *
                   specfun::mittag_leffler({k.alpha, k.alpha}, k.rate * ta);
          },
          [t](const SumOfExponentialsKernel& k) {
            double s = 0.0;
            for (std::size_t i = 0; i < k.c.size(); ++i) s += k.c[i] * std::exp(-k.b[i] * t);
            return s;
          },
          [t](const CustomKernel& k) { return k.eval(t); },
      },
      spec.params());
}

double integrated_kernel(const KernelSpec& spec, double t) {
  check_time(t, "integrated_kernel");
  if (t == 0.0) {
    return 0.0;
  }
  return std::visit(
      Overloaded{
          [t](const ExponentialKernel& k) { return exp_integrated(k, t); },
          [t](const FractionalKernel& k) {
            return k.c * std::pow(t, k.alpha) / std::tgamma(k.alpha + 1.0);
          },
          [t](const GammaKernel& k) {
            return k.c * std::pow(k.b, -k.alpha) * specfun::lower_incomplete_gamma(k.alpha, k.b * t);
          },
          [t](const MittagLefflerKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double ta = std::pow(t, k.alpha);
            return k.c * ta * specfun::mittag_leffler({k.alpha, k.alpha + 1.0}, k.rate * ta);
          },
          [t](const TemperedMittagLefflerKernel& k) {
            const double x = k.b * t;
            return tempered_series(k, [x](double a) { return specfun::lower_incomplete_gamma(a, x); });
          },
          [t](const SumOfExponentialsKernel& k) {
            double s = 0.0;
            for (std::size_t i = 0; i < k.c.size(); ++i) s += exp_integrated({k.c[i], k.b[i]}, t);
            return s;
          },
          [t](const CustomKernel& k) { return custom_integrated(k, t); },
      },
      spec.params());
}

namespace {

// int_a^b K with the width b - a passed separately, so that grid cells of
// width T / n do not inherit the rounding of t_{j+1} - t_j.
double interval_integral_impl(const KernelSpec& spec, double a, double b, double width) {
  return std::visit(
      Overloaded{
          [&](const ExponentialKernel& k) { return exp_interval(k, a, width); },
          [&](const SumOfExponentialsKernel& k) {
            double s = 0.0;
            for (std::size_t i = 0; i < k.c.size(); ++i) s += exp_interval({k.c[i], k.b[i]}, a, width);
            return s;
          },
          [&](const FractionalKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double scale = k.c / std::tgamma(k.alpha + 1.0);
            if (a == 0.0) return scale * std::pow(b, k.alpha);
            // a^alpha ((b/a)^alpha - 1) without cancellation.
            return scale * std::pow(a, k.alpha) * std::expm1(k.alpha * std::log1p(width / a));
          },
          [&](const GammaKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double scale = k.c * std::pow(k.b, -k.alpha);
            const double xa = k.b * a;
            const double xb = k.b * b;
            if (xa > k.alpha) {
              return scale * (specfun::upper_incomplete_gamma(k.alpha, xa) -
                              specfun::upper_incomplete_gamma(k.alpha, xb));
            }
            return scale * (specfun::lower_incomplete_gamma(k.alpha, xb) -
                            specfun::lower_incomplete_gamma(k.alpha, xa));
          },
          [&](const auto&) { return integrated_kernel(spec, b) - integrated_kernel(spec, a); },
      },
      spec.params());
}

}  // namespace

double interval_integral(const KernelSpec& spec, double a, double b) {
  check_time(a, "interval_integral");
  check_time(b, "interval_integral");
  if (b <= a) {
    return 0.0;
  }
  return interval_integral_impl(spec, a, b, b - a);
}

double double_integrated_kernel(const KernelSpec& spec, double t) {
  check_time(t, "double_integrated_kernel");
  if (t == 0.0) {
    return 0.0;
  }
  return std::visit(
      Overloaded{
          [t](const ExponentialKernel& k) { return exp_double_integrated(k, t); },
          [t](const FractionalKernel& k) {
            return k.c * std::pow(t, k.alpha + 1.0) / std::tgamma(k.alpha + 2.0);
          },
          [t](const GammaKernel& k) {
            const double x = k.b * t;
            return k.c * std::pow(k.b, -k.alpha) *
                   (t * specfun::lower_incomplete_gamma(k.alpha, x) -
                    (k.alpha / k.b) * specfun::lower_incomplete_gamma(k.alpha + 1.0, x));
          },
          [t](const MittagLefflerKernel& k) {
            if (k.c == 0.0) return 0.0;
            const double ta = std::pow(t, k.alpha);
            return k.c * ta * t * specfun::mittag_leffler({k.alpha, k.alpha + 2.0}, k.rate * ta);
          },
          [t](const TemperedMittagLefflerKernel& k) {
            const double x = k.b * t;
            const double b = k.b;
            return tempered_series(k, [x, t, b](double a) {
              return t * specfun::lower_incomplete_gamma(a, x) -
                     (a / b) * specfun::lower_incomplete_gamma(a + 1.0, x);
            });
          },
          [t](const SumOfExponentialsKernel& k) {
            double s = 0.0;
            for (std::size_t i = 0; i < k.c.size(); ++i) s += exp_double_integrated({k.c[i], k.b[i]}, t);
            return s;
          },
          [t](const CustomKernel& k) {
            return quad([&k](double s) { return custom_integrated(k, s); }, 0.0, t);
          },
      },
      spec.params());
}

double inverse_integrated_kernel(const KernelSpec& spec, double x, double upper) {
  if (!(x >= 0.0)) {
    throw DomainError("inverse_integrated_kernel: target must be >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  const double total = integrated_kernel(spec, upper);
  if (x >= total) {
    return upper;
  }
  if (const auto* k = std::get_if<ExponentialKernel>(&spec.params())) {
    if (k->b == 0.0) return x / k->c;
    return std::min(upper, -std::log1p(-x * k->b / k->c) / k->b);
  }
  if (const auto* k = std::get_if<FractionalKernel>(&spec.params())) {
    return std::min(upper, std::pow(x * std::tgamma(k->alpha + 1.0) / k->c, 1.0 / k->alpha));
  }
  auto f = [&](double s) { return integrated_kernel(spec, s) - x; };
  auto tol = [](double lo, double hi) { return hi - lo <= kInverseTol; };
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, upper, -x, total - x, tol, max_iter);
  return 0.5 * (lo + hi);
}

double kernel_envelope(const KernelSpec& spec, double t, double horizon) {
  const double at_horizon_t = std::max(t, 0.0);
  return std::visit(
      Overloaded{
          [&](const ExponentialKernel& k) {
            return k.b >= 0.0 ? kernel_eval(spec, at_horizon_t) : kernel_eval(spec, horizon);
          },
          [&](const FractionalKernel& k) {
            return k.alpha <= 1.0 ? kernel_eval(spec, at_horizon_t) : kernel_eval(spec, horizon);
          },
          [&](const GammaKernel& k) {
            if (k.alpha <= 1.0) return kernel_eval(spec, at_horizon_t);
            const double mode = (k.alpha - 1.0) / k.b;
            return kernel_eval(spec, std::max(at_horizon_t, std::min(mode, horizon)));
          },
          [&](const SumOfExponentialsKernel&) { return kernel_eval(spec, at_horizon_t); },
          [&](const CustomKernel& k) -> double {
            if (!k.envelope) {
              throw ConfigError(
                  "thinning: custom kernel needs a dominating nonincreasing envelope");
            }
            return k.envelope(at_horizon_t, horizon);
          },
          [&](const auto&) -> double {
            throw ConfigError("thinning: no monotone envelope known for " + spec.describe() +
                                   "; supply a dominating nonincreasing custom kernel");
          },
      },
      spec.params());
}

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

namespace {

Grid make_grid(const KernelSpec& k, double horizon, std::size_t steps, GridKind kind) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("grid: horizon must be positive and finite");
  }
  if (steps == 0) {
    throw DomainError("grid: step count must be positive");
  }
  Grid g;
  g.horizon = horizon;
  g.steps = steps;
  g.kind = kind;
  g.weights.resize(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    g.weights[j] = interval_integral_impl(k, g.time(j), g.time(j + 1), g.step());
    if (!std::isfinite(g.weights[j])) {
      throw DomainError("grid: non-finite weight at index " + std::to_string(j));
    }
  }
  return g;
}

}  // namespace

Grid grid_weights(const KernelSpec& k, double horizon, std::size_t steps) {
  Grid g = make_grid(k, horizon, steps, GridKind::Kernel);
  if (g.weights[0] >= 1.0) {
    std::ostringstream os;
    os << "k_0 = " << g.weights[0] << " >= 1 for n = " << steps
       << "; the implicit step is ill-posed, increase the number of steps";
    throw WellPosednessError(os.str());
  }
  for (double w : g.weights) {
    if (w < 0.0) {
      throw DomainError("grid: kernel weights must be nonnegative");
    }
  }
  return g;
}

bool has_resolvent(const KernelSpec& k) {
  const auto f = k.family();
  return f != KernelFamily::Custom && f != KernelFamily::SumOfExponentials;
}

KernelSpec resolvent_of(const KernelSpec& spec) {
  return std::visit(
      Overloaded{
          [](const ExponentialKernel& k) { return KernelSpec::exponential(k.c, k.b - k.c); },
          [](const FractionalKernel& k) {
            if (k.alpha > 2.0) {
              throw UnsupportedError("resolvent_of: fractional kernels need alpha <= 2");
            }
            return KernelSpec::mittag_leffler(k.c, k.c, k.alpha);
          },
          [](const GammaKernel& k) {
            if (k.alpha > 2.0) {
              throw UnsupportedError("resolvent_of: gamma kernels need alpha <= 2");
            }
            return KernelSpec::tempered_mittag_leffler(k.c, k.c, k.b, k.alpha);
          },
          [](const MittagLefflerKernel& k) {
            return KernelSpec::mittag_leffler(k.c, k.rate + k.c, k.alpha);
          },
          [](const TemperedMittagLefflerKernel& k) {
            return KernelSpec::tempered_mittag_leffler(k.c, k.rate + k.c, k.b, k.alpha);
          },
          [](const SumOfExponentialsKernel&) -> KernelSpec {
            throw UnsupportedError("resolvent_of: no closed-form resolvent for sums of exponentials");
          },
          [](const CustomKernel&) -> KernelSpec {
            throw UnsupportedError("resolvent_of: no closed-form resolvent for custom kernels");
          },
      },
      spec.params());
}

Grid resolvent_grid_weights(const KernelSpec& k, double horizon, std::size_t steps) {
  return make_grid(resolvent_of(k), horizon, steps, GridKind::Resolvent);
}

double resolvent_baseline(const Baseline& g, const KernelSpec& k, double t) {
  check_time(t, "resolvent_baseline");
  const KernelSpec r = resolvent_of(k);
  if (g.is_constant()) {
    return g.mu() * (t + double_integrated_kernel(r, t));
  }
  // Integration by parts: int_0^t R(t-s) G0(s) ds = int_0^t Rbar(t-s) g0(s) ds.
  const double conv = quad([&](double s) { return integrated_kernel(r, t - s) * g.rate(s); }, 0.0, t);
  return g.integrated(t) + conv;
}

std::vector<double> g0r_increments(const Baseline& g, const KernelSpec& k, double horizon,
                                   std::size_t steps) {
  if (!(horizon > 0.0) || steps == 0) {
    throw DomainError("g0r_increments: need horizon > 0 and steps > 0");
  }
  const KernelSpec r = resolvent_of(k);
  std::vector<double> out(steps);
  const double dt = horizon / static_cast<double>(steps);
  auto time = [&](std::size_t i) { return horizon * static_cast<double>(i) / static_cast<double>(steps); };
  if (g.is_constant()) {
    double prev = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
      const double next = double_integrated_kernel(r, time(i + 1));
      out[i] = g.mu() * (dt + (next - prev));
      prev = next;
    }
    return out;
  }
  double prev = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double next = resolvent_baseline(g, k, time(i + 1));
    out[i] = next - prev;
    prev = next;
  }
  return out;
}

}  // namespace hawkes
