#include "hawkes/exact.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <variant>

#include "hawkes/errors.hpp"

namespace hawkes {
namespace {

EventList finish(std::vector<double> times, double horizon, SamplerStats* stats, std::size_t candidates) {
  std::sort(times.begin(), times.end());
  EventList e{std::move(times)};
  validate_events(e, horizon);
  if (stats != nullptr) {
    stats->events = e.times.size();
    stats->candidates = candidates;
  }
  return e;
}

// Thinning for a single exponential kernel: the excitation decays as one scalar.
EventList ogata_exponential(const ExponentialKernel& k, const Baseline& g, double horizon, RngStream& r,
                            SamplerStats* stats) {
  std::vector<double> times;
  std::size_t candidates = 0;
  double t = 0.0;
  double excitation = 0.0;  // sum_i K(t - tau_i)
  for (;;) {
    const double bound = g.running_max(t, horizon) + excitation;
    if (!(bound > 0.0)) {
      break;
    }
    const double next = t + sample_exponential(r, bound);
    if (next >= horizon) {
      break;
    }
    excitation *= std::exp(-k.b * (next - t));
    t = next;
    ++candidates;
    const double intensity = g.rate(t) + excitation;
    if (intensity > bound * (1.0 + 1e-12)) {
      throw DomainError("thinning: intensity exceeded its bound");
    }
    if (r.uniform() * bound <= intensity && (times.empty() || t > times.back())) {
      times.push_back(t);
      excitation += k.c;
    }
  }
  return finish(std::move(times), horizon, stats, candidates);
}

}  // namespace

void validate_events(const EventList& e, double horizon) {
  for (std::size_t i = 0; i < e.times.size(); ++i) {
    const double t = e.times[i];
    if (!(t >= 0.0 && t <= horizon)) {
      throw DomainError("events: time outside [0, T]");
    }
    if (i > 0 && !(t > e.times[i - 1])) {
      throw DomainError("events: times must be strictly increasing");
    }
  }
}

EventList simulate_population(const KernelSpec& k, const Baseline& g, double horizon, RngStream& r,
                              SamplerStats* stats) {
  if (!(horizon > 0.0)) {
    throw DomainError("population: horizon must be positive");
  }
  std::vector<double> times;
  std::deque<double> queue;
  std::size_t inversions = 0;
  const double g_total = g.integrated(horizon);
  const std::uint64_t migrants = sample_poisson(r, g_total);
  for (std::uint64_t m = 0; m < migrants; ++m) {
    const double tau = g.inverse_integrated(sample_uniform(r, 0.0, g_total), horizon);
    ++inversions;
    if (tau < horizon) {
      queue.push_back(tau);
    }
  }
  const bool kernel_zero = k.is_zero();
  while (!queue.empty()) {
    const double tau = queue.front();
    queue.pop_front();
    times.push_back(tau);
    if (kernel_zero) {
      continue;
    }
    const double remaining = horizon - tau;
    const double mass = integrated_kernel(k, remaining);
    const std::uint64_t children = sample_poisson(r, mass);
    for (std::uint64_t c = 0; c < children; ++c) {
      const double lag = inverse_integrated_kernel(k, sample_uniform(r, 0.0, mass), remaining);
      ++inversions;
      const double child = tau + lag;
      if (child < horizon) {
        queue.push_back(child);
      }
    }
  }
  return finish(std::move(times), horizon, stats, inversions);
}

double default_thinning_epsilon(const KernelSpec& k) { return k.singular_at_zero() ? 1e-10 : 0.0; }

EventList simulate_ogata(const KernelSpec& k, const Baseline& g, double horizon, RngStream& r,
                         std::optional<double> epsilon, SamplerStats* stats) {
  if (!(horizon > 0.0)) {
    throw DomainError("thinning: horizon must be positive");
  }
  const double eps = epsilon.value_or(default_thinning_epsilon(k));
  if (!(eps >= 0.0)) {
    throw DomainError("thinning: epsilon must be >= 0");
  }
  if (k.singular_at_zero() && eps == 0.0) {
    throw ConfigError("thinning: singular kernels need epsilon > 0");
  }
  if (const auto* e = std::get_if<ExponentialKernel>(&k.params()); e != nullptr && e->b >= 0.0) {
    return ogata_exponential(*e, g, horizon, r, stats);
  }
  // Probe once so unsupported kernels fail before any sampling.
  (void)kernel_envelope(k, horizon, horizon);

  std::vector<double> times;
  std::size_t candidates = 0;
  double t = 0.0;
  for (;;) {
    double bound = g.running_max(t, horizon);
    for (double tau : times) {
      bound += kernel_envelope(k, std::max(t - tau, eps), horizon);
    }
    if (!(bound > 0.0)) {
      break;
    }
    t += sample_exponential(r, bound);
    if (t >= horizon) {
      break;
    }
    ++candidates;
    double intensity = g.rate(t);
    for (double tau : times) {
      intensity += kernel_eval(k, std::max(t - tau, eps));
    }
    if (intensity > bound * (1.0 + 1e-12)) {
      throw DomainError("thinning: intensity exceeded its bound; the kernel envelope is invalid");
    }
    if (r.uniform() * bound <= intensity && (times.empty() || t > times.back())) {
      times.push_back(t);
    }
  }
  return finish(std::move(times), horizon, stats, candidates);
}

double compensator(const EventList& e, const KernelSpec& k, const Baseline& g, double t) {
  double s = g.integrated(t);
  for (double tau : e.times) {
    if (tau >= t) {
      break;
    }
    s += integrated_kernel(k, t - tau);
  }
  return s;
}

PathRecord counting_path_from_events(const EventList& e, const KernelSpec& k, const Baseline& g,
                                     double horizon, std::size_t steps) {
  if (steps == 0 || !(horizon > 0.0)) {
    throw DomainError("counting path: need horizon > 0 and steps > 0");
  }
  validate_events(e, horizon);
  PathRecord rec;
  rec.n_inc.assign(steps, 0);
  rec.lambda_inc.assign(steps, 0.0);
  const double n = static_cast<double>(steps);
  for (double tau : e.times) {
    auto bin = static_cast<std::size_t>(std::floor(tau / horizon * n));
    bin = std::min(bin, steps - 1);
    // Align with the grid's own breakpoints.
    while (bin > 0 && tau < horizon * static_cast<double>(bin) / n) --bin;
    while (bin + 1 < steps && tau >= horizon * static_cast<double>(bin + 1) / n) ++bin;
    ++rec.n_inc[bin];
  }
  double prev = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double next = compensator(e, k, g, horizon * static_cast<double>(i + 1) / n);
    rec.lambda_inc[i] = next - prev;
    prev = next;
  }
  rec.jump_times = e.times;
  return rec;
}

}  // namespace hawkes
