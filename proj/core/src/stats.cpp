#include "hawkes/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "hawkes/errors.hpp"
#include "hawkes/specfun.hpp"

namespace hawkes {
namespace {

constexpr std::size_t kPairwiseBlock = 8;

void require_nonempty(std::span<const double> x, const char* what) {
  if (x.empty()) {
    throw DomainError(std::string(what) + ": empty sample");
  }
}

std::vector<double> sorted(std::span<const double> x) {
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return s;
}

// Empirical quantile with the inverse-cdf convention.
double quantile(const std::vector<double>& s, double q) {
  const double n = static_cast<double>(s.size());
  auto idx = static_cast<std::size_t>(std::ceil(q * n));
  idx = std::clamp<std::size_t>(idx, 1, s.size());
  return s[idx - 1];
}

struct Cell {
  double a = 0.0;
  double b = 0.0;
};

}  // namespace

double pairwise_sum(std::span<const double> x) {
  if (x.size() <= kPairwiseBlock) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

EstimateWithError mean_estimate(std::span<const double> samples) {
  require_nonempty(samples, "mean_estimate");
  const double n = static_cast<double>(samples.size());
  const double mean = pairwise_sum(samples) / n;
  if (samples.size() == 1) {
    return {mean, 0.0, 1};
  }
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - mean;
    dev[i] = d * d;
  }
  const double var = pairwise_sum(dev) / (n - 1.0);
  return {mean, std::sqrt(var / n), samples.size()};
}

EstimateWithError laplace_estimate(std::span<const double> samples, double w) {
  require_nonempty(samples, "laplace_estimate");
  if (!(w <= 0.0)) {
    throw DomainError("laplace_estimate: w must be <= 0");
  }
  std::vector<double> e(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    e[i] = std::exp(w * samples[i]);
  }
  return mean_estimate(e);
}

double kolmogorov_pvalue(double lambda) {
  if (lambda <= 0.0) {
    return 1.0;
  }
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    s += (k % 2 == 1) ? term : -term;
  }
  return std::clamp(2.0 * s, 0.0, 1.0);
}

KSResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf) {
  require_nonempty(samples, "ks_one_sample");
  const std::vector<double> s = sorted(samples);
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_pvalue(std::sqrt(n) * d), s.size()};
}

double ecdf_distance(std::span<const double> a, std::span<const double> b) {
  require_nonempty(a, "ecdf_distance");
  require_nonempty(b, "ecdf_distance");
  const std::vector<double> sa = sorted(a);
  const std::vector<double> sb = sorted(b);
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

KSResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  const double d = ecdf_distance(a, b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ne = na * nb / (na + nb);
  return {d, kolmogorov_pvalue(std::sqrt(ne) * d), a.size() + b.size()};
}

std::vector<std::pair<double, double>> qq_pairs(std::span<const double> a, std::span<const double> b) {
  require_nonempty(a, "qq_pairs");
  require_nonempty(b, "qq_pairs");
  const std::vector<double> sa = sorted(a);
  const std::vector<double> sb = sorted(b);
  const std::size_t m = std::min(sa.size(), sb.size());
  std::vector<std::pair<double, double>> out(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const double q = static_cast<double>(k) / static_cast<double>(m + 1);
    out[k - 1] = {quantile(sa, q), quantile(sb, q)};
  }
  return out;
}

double chi_square_pvalue(double statistic, std::size_t dof) {
  if (dof == 0) {
    return 1.0;
  }
  if (statistic <= 0.0) {
    return 1.0;
  }
  return specfun::upper_incomplete_gamma(0.5 * static_cast<double>(dof), 0.5 * statistic);
}

double poisson_pmf(double mean, std::uint64_t k) {
  if (mean == 0.0) {
    return k == 0 ? 1.0 : 0.0;
  }
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                               const std::function<double(std::uint64_t)>& pmf, double min_expected) {
  if (counts.empty()) {
    throw DomainError("chi_square_gof: empty sample");
  }
  const double n = static_cast<double>(counts.size());
  const std::uint64_t max_seen = *std::max_element(counts.begin(), counts.end());
  std::vector<double> observed(max_seen + 1, 0.0);
  for (std::uint64_t c : counts) observed[c] += 1.0;
  std::vector<double> expected(max_seen + 1);
  double cum = 0.0;
  for (std::uint64_t k = 0; k <= max_seen; ++k) {
    expected[k] = n * pmf(k);
    cum += expected[k];
  }
  // The last cell is {k >= max_seen}.
  expected[max_seen] += std::max(0.0, n - cum);

  std::vector<Cell> cells;  // a = observed, b = expected
  Cell acc;
  for (std::uint64_t k = 0; k <= max_seen; ++k) {
    acc.a += observed[k];
    acc.b += expected[k];
    if (acc.b >= min_expected) {
      cells.push_back(acc);
      acc = {};
    }
  }
  if (acc.b > 0.0 || acc.a > 0.0) {
    if (cells.empty()) {
      cells.push_back(acc);
    } else {
      cells.back().a += acc.a;
      cells.back().b += acc.b;
    }
  }
  ChiSquareResult r;
  for (const Cell& c : cells) {
    if (c.b > 0.0) {
      r.statistic += (c.a - c.b) * (c.a - c.b) / c.b;
    } else if (c.a > 0.0) {
      r.statistic = std::numeric_limits<double>::infinity();
    }
  }
  r.dof = cells.size() > 1 ? cells.size() - 1 : 0;
  r.p_value = std::isinf(r.statistic) ? 0.0 : chi_square_pvalue(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                      double min_expected) {
  if (a.empty() || b.empty()) {
    throw DomainError("chi_square_two_sample: empty sample");
  }
  std::map<std::uint64_t, Cell> table;
  for (std::uint64_t v : a) table[v].a += 1.0;
  for (std::uint64_t v : b) table[v].b += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double fa = na / (na + nb);
  const double fb = nb / (na + nb);

  std::vector<Cell> cells;
  Cell acc;
  for (const auto& [value, c] : table) {
    acc.a += c.a;
    acc.b += c.b;
    const double total = acc.a + acc.b;
    if (total * fa >= min_expected && total * fb >= min_expected) {
      cells.push_back(acc);
      acc = {};
    }
  }
  if (acc.a + acc.b > 0.0) {
    if (cells.empty()) {
      cells.push_back(acc);
    } else {
      cells.back().a += acc.a;
      cells.back().b += acc.b;
    }
  }
  ChiSquareResult r;
  for (const Cell& c : cells) {
    const double total = c.a + c.b;
    const double ea = total * fa;
    const double eb = total * fb;
    r.statistic += (c.a - ea) * (c.a - ea) / ea + (c.b - eb) * (c.b - eb) / eb;
  }
  r.dof = cells.size() > 1 ? cells.size() - 1 : 0;
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

TimeChangeResult time_change_test(const EventList& e, const KernelSpec& k, const Baseline& g) {
  for (std::size_t i = 1; i < e.times.size(); ++i) {
    if (!(e.times[i] > e.times[i - 1])) {
      throw DomainError("time_change_test: events must be strictly increasing");
    }
  }
  if (e.times.empty()) {
    throw DomainError("time_change_test: no events");
  }
  TimeChangeResult out;
  out.transformed.resize(e.times.size());
  for (std::size_t i = 0; i < e.times.size(); ++i) {
    const double tau = e.times[i];
    double s = g.integrated(tau);
    for (std::size_t j = 0; j < i; ++j) {
      s += integrated_kernel(k, tau - e.times[j]);
    }
    out.transformed[i] = s;
  }
  std::vector<double> gaps(out.transformed.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    gaps[i] = out.transformed[i] - prev;
    prev = out.transformed[i];
  }
  out.ks = ks_one_sample(gaps, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); });
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    out.scatter.emplace_back(std::exp(-gaps[i]), std::exp(-gaps[i + 1]));
  }
  return out;
}

}  // namespace hawkes
