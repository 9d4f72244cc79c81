#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library's numerics, except where a helper says so explicitly.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

// Brute-force Mittag-Leffler series in 100-digit arithmetic.
inline double mittag_leffler(double alpha, double beta, double z) {
  const Big zz(z);
  Big sum = 0;
  Big power = 1;
  Big peak = 0;
  for (int n = 0; n < 20000; ++n) {
    const Big term = power / boost::math::tgamma(Big(alpha) * n + Big(beta));
    sum += term;
    const Big mag = abs(term);
    if (mag > peak) peak = mag;
    if (n > 10 && mag < Big("1e-60") * peak && mag < Big("1e-60")) break;
    power *= zz;
  }
  return static_cast<double>(sum);
}

// exp(x^2) erfc(x) in extended precision, equal to E_{1/2,1}(-x).
inline double scaled_erfc(double x) {
  const Big bx(x);
  return static_cast<double>(exp(bx * bx) * boost::math::erfc(bx));
}

inline double gamma_p(double a, double x) { return boost::math::gamma_p(a, x); }

// Integral of f over [a, b] by tanh-sinh quadrature; tolerates endpoint singularities.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-13);
}

inline double poisson_pmf(double mean, std::uint64_t k) {
  double p = std::exp(-mean);
  for (std::uint64_t i = 1; i <= k; ++i) p *= mean / static_cast<double>(i);
  return p;
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

inline Moments sample_moments(const std::vector<double>& x) {
  long double s = 0.0L;
  for (double v : x) s += v;
  const long double m = s / x.size();
  long double ss = 0.0L;
  for (double v : x) ss += (v - m) * (v - m);
  const long double var = ss / (x.size() - 1);
  return {static_cast<double>(m), static_cast<double>(std::sqrt(var / x.size()))};
}

}  // namespace oracle
