#include "hawkes/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hawkes/errors.hpp"

namespace hawkes::specfun {
namespace {

constexpr int kMaxSeriesTerms = 10'000;
constexpr double kSeriesRelTol = 1e-16;

// z^(1/alpha) beyond which the positive axis switches to the asymptotic form.
constexpr double kPositiveAsymptoticRoot = 40.0;
// |z|^(1/alpha) up to which negative arguments are summed in extended precision.
constexpr double kNegativeSeriesRoot = 80.0;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double series_term(double alpha, double beta, double z, int n) {
  const double arg = alpha * n + beta;
  if (arg < 170.0) {
    return std::pow(z, n) / std::tgamma(arg);
  }
  const double mag = std::exp(n * std::log(std::abs(z)) - std::lgamma(arg));
  return (z < 0.0 && (n % 2 == 1)) ? -mag : mag;
}

double ml_series_double(double alpha, double beta, double z) {
  KahanSum acc;
  acc.add(reciprocal_gamma(beta));
  for (int n = 1;; ++n) {
    if (n >= kMaxSeriesTerms) {
      throw DomainError("mittag_leffler: series did not converge within 10000 terms");
    }
    const double term = series_term(alpha, beta, z, n);
    acc.add(term);
    if (std::abs(term) <= kSeriesRelTol * std::abs(acc.sum)) {
      break;
    }
  }
  return acc.sum;
}

double ml_series_extended(double alpha, double beta, double z) {
  using Real = boost::multiprecision::cpp_bin_float_100;
  const Real zz(z);
  const Real a(alpha);
  const Real b(beta);
  Real sum = 1 / boost::math::tgamma(b);
  Real power = 1;
  Real max_term = abs(sum);
  Real prev = max_term;
  const Real cutoff("1e-90");
  for (int n = 1;; ++n) {
    if (n >= kMaxSeriesTerms) {
      throw DomainError("mittag_leffler: series did not converge within 10000 terms");
    }
    power *= zz;
    const Real term = power / boost::math::tgamma(a * n + b);
    sum += term;
    const Real mag = abs(term);
    if (mag > max_term) {
      max_term = mag;
    }
    if (mag < prev && mag <= cutoff * max_term) {
      break;
    }
    prev = mag;
  }
  return static_cast<double>(sum);
}

// -sum_{k>=1} z^{-k} / Gamma(beta - alpha k), truncated at the smallest term.
double ml_algebraic_tail(double alpha, double beta, double z) {
  KahanSum acc;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double term = std::pow(z, -k) * reciprocal_gamma(beta - alpha * k);
    if (term == 0.0) {
      continue;
    }
    const double mag = std::abs(term);
    if (mag > prev) {
      break;
    }
    acc.add(-term);
    prev = mag;
    if (mag <= kSeriesRelTol * std::abs(acc.sum)) {
      break;
    }
  }
  return acc.sum;
}

double ml_positive_asymptotic(double alpha, double beta, double z) {
  const double root = std::pow(z, 1.0 / alpha);
  const double log_lead = root + ((1.0 - beta) / alpha) * std::log(z) - std::log(alpha);
  const double lead = std::exp(log_lead);
  if (!std::isfinite(lead)) {
    throw OverflowError("mittag_leffler: result overflows double at z = " + std::to_string(z));
  }
  return lead + ml_algebraic_tail(alpha, beta, z);
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double upper_gamma_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxSeriesTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= 1e-16) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  throw DomainError("incomplete gamma: continued fraction did not converge");
}

// Power series for P(a, x), valid for x < a + 1.
double lower_gamma_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int i = 0; i < kMaxSeriesTerms; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw DomainError("incomplete gamma: series did not converge");
}

void check_incomplete_gamma_args(double alpha, double x) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("incomplete gamma: alpha must be positive, got " + std::to_string(alpha));
  }
  if (!(x >= 0.0) || std::isnan(x)) {
    throw DomainError("incomplete gamma: x must be nonnegative, got " + std::to_string(x));
  }
}

}  // namespace

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    return 0.0;
  }
  if (x > 171.0) {
    return std::exp(-std::lgamma(x));
  }
  return 1.0 / std::tgamma(x);
}

double mittag_leffler(MLParams p, double z) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw DomainError("mittag_leffler: alpha and beta must be positive");
  }
  if (p.alpha > 2.0) {
    throw DomainError("mittag_leffler: alpha > 2 is not supported");
  }
  if (!std::isfinite(z)) {
    throw DomainError("mittag_leffler: argument must be finite");
  }
  if (z == 0.0) {
    return reciprocal_gamma(p.beta);
  }
  const double root = std::pow(std::abs(z), 1.0 / p.alpha);
  if (z > 0.0) {
    if (root <= kPositiveAsymptoticRoot) {
      return ml_series_double(p.alpha, p.beta, z);
    }
    return ml_positive_asymptotic(p.alpha, p.beta, z);
  }
  if (root <= 1.0) {
    return ml_series_double(p.alpha, p.beta, z);
  }
  if (root <= kNegativeSeriesRoot) {
    return ml_series_extended(p.alpha, p.beta, z);
  }
  // The oscillating exponential contributions decay like exp(root * cos(pi / alpha)).
  const double decay = p.alpha <= 1.0 ? std::numeric_limits<double>::infinity()
                                      : -root * std::cos(std::numbers::pi / p.alpha);
  if (decay < 40.0) {
    throw DomainError("mittag_leffler: negative argument too large for alpha close to 2");
  }
  return ml_algebraic_tail(p.alpha, p.beta, z);
}

double lower_incomplete_gamma(double alpha, double x) {
  check_incomplete_gamma_args(alpha, x);
  if (x == 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return 1.0;
  }
  if (x < alpha + 1.0) {
    return lower_gamma_series(alpha, x);
  }
  return 1.0 - upper_gamma_cf(alpha, x);
}

double upper_incomplete_gamma(double alpha, double x) {
  check_incomplete_gamma_args(alpha, x);
  if (x == 0.0) {
    return 1.0;
  }
  if (std::isinf(x)) {
    return 0.0;
  }
  if (x < alpha + 1.0) {
    return 1.0 - lower_gamma_series(alpha, x);
  }
  return upper_gamma_cf(alpha, x);
}

}  // namespace hawkes::specfun
