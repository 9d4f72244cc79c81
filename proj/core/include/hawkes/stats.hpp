#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hawkes/exact.hpp"
#include "hawkes/kernels.hpp"

namespace hawkes {

/// Monte Carlo point estimate; std_error is the sample standard deviation over sqrt(n).
struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

struct KSResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

struct TimeChangeResult {
  KSResult ks;
  /// Lambda(tau_i) for every event.
  std::vector<double> transformed;
  /// (exp(-d_i), exp(-d_{i+1})) for consecutive transformed interarrivals d_i.
  std::vector<std::pair<double, double>> scatter;
};

/// Recursive pairwise sum with a fixed split, so the result depends only on
/// the order of `x`.
double pairwise_sum(std::span<const double> x);

/// Sample mean and its standard error.
EstimateWithError mean_estimate(std::span<const double> samples);

/// E[exp(w X)] for w <= 0.
EstimateWithError laplace_estimate(std::span<const double> samples, double w);

/// P(K > lambda) for the limiting Kolmogorov distribution (100-term series).
double kolmogorov_pvalue(double lambda);

KSResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf);
KSResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// sup_x |F_a(x) - F_b(x)|.
double ecdf_distance(std::span<const double> a, std::span<const double> b);

/// Pairs of empirical quantiles at levels k / (m + 1), k = 1..m, m = min(|a|, |b|).
std::vector<std::pair<double, double>> qq_pairs(std::span<const double> a, std::span<const double> b);

/// Upper tail of the chi-square distribution.
double chi_square_pvalue(double statistic, std::size_t dof);

/// Goodness of fit of integer counts to a discrete law pmf(k), k >= 0. Cells
/// are merged from both ends until each expected count is at least
/// `min_expected`; the last cell absorbs the upper tail.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               const std::function<double(std::uint64_t)>& pmf,
                               double min_expected = 5.0);

/// Homogeneity test of two integer samples on pooled cells with at least
/// `min_expected` expected observations in each sample.
ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      double min_expected = 5.0);

/// Poisson(mean) probability mass at k.
double poisson_pmf(double mean, std::uint64_t k);

/// Compensator transform of the events and KS of the interarrivals against Exp(1).
TimeChangeResult time_change_test(const EventList& e, const KernelSpec& k, const Baseline& g);

}  // namespace hawkes
