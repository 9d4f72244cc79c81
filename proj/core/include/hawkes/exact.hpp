#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hawkes/kernels.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/schemes.hpp"

namespace hawkes {

/// Strictly increasing event times in [0, T].
struct EventList {
  std::vector<double> times;
};

/// Work counters of an exact sampler run.
struct SamplerStats {
  std::size_t events = 0;
  /// Thinning: proposed candidates. Population: inverse-map evaluations.
  std::size_t candidates = 0;
};

/// Branching (immigrant-birth) sampler. Migrants come from the time change of
/// G0, each event spawns Poisson(Kbar(T - tau)) children placed through Kbar^-1.
/// Exact in law.
EventList simulate_population(const KernelSpec& k, const Baseline& g, double horizon, RngStream& r,
                              SamplerStats* stats = nullptr);

/// Default thinning shift: 1e-10 for kernels singular at 0, else 0.
double default_thinning_epsilon(const KernelSpec& k);

/// Thinning with a piecewise bound M = sup g0 + sum_i Km(t - tau_i), where Km is
/// a nonincreasing envelope of K. The intensity uses K(max(t - tau, epsilon)),
/// which is exact when epsilon = 0 and K(0) is finite.
/// Throws ConfigError when no envelope is known for the kernel.
EventList simulate_ogata(const KernelSpec& k, const Baseline& g, double horizon, RngStream& r,
                         std::optional<double> epsilon = std::nullopt, SamplerStats* stats = nullptr);

/// Lambda(t) = G0(t) + sum_{tau_j < t} Kbar(t - tau_j).
double compensator(const EventList& e, const KernelSpec& k, const Baseline& g, double t);

/// Bins events on the uniform grid and fills lambda_inc with exact compensator
/// increments. jump_times is set to the events.
PathRecord counting_path_from_events(const EventList& e, const KernelSpec& k, const Baseline& g,
                                     double horizon, std::size_t steps);

/// Throws DomainError unless times are strictly increasing and within [0, horizon].
void validate_events(const EventList& e, double horizon);

}  // namespace hawkes
