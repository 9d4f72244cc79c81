#pragma once

namespace hawkes::specfun {

/// Parameters (alpha, beta) of the two-parameter Mittag-Leffler function.
struct MLParams {
  double alpha;
  double beta;
};

/// E_{alpha,beta}(z) = sum_n z^n / Gamma(alpha n + beta) for real z.
///
/// Supported for 0 < alpha <= 2, beta > 0. Positive arguments use the
/// compensated series while z^(1/alpha) <= 40 and the exponential asymptotic
/// expansion beyond. Negative arguments fall back to an extended-precision
/// series (the alternating sum cancels catastrophically in double) and, for
/// very large |z|, to the algebraic asymptotic expansion.
///
/// Throws DomainError for invalid parameters or non-finite z, and
/// OverflowError when the result exceeds the double range.
double mittag_leffler(MLParams p, double z);

/// Regularized lower incomplete gamma P(alpha, x) = gamma(alpha, x) / Gamma(alpha).
double lower_incomplete_gamma(double alpha, double x);

/// Regularized upper incomplete gamma Q(alpha, x) = 1 - P(alpha, x), computed
/// without cancellation in the upper tail.
double upper_incomplete_gamma(double alpha, double x);

/// 1 / Gamma(x), zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

}  // namespace hawkes::specfun
