#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hawkes/kernels.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

enum class SchemeVariant { IVi, ResolventIVi, ExplicitII, MarkovIVi, MultifactorIVi };

std::string to_string(SchemeVariant v);
/// Accepts the names produced by to_string; throws ConfigError otherwise.
SchemeVariant scheme_from_string(const std::string& name);

struct SchemeConfig {
  KernelSpec kernel = KernelSpec::zero();
  Baseline baseline = Baseline::constant(0.0);
  double horizon = 1.0;
  std::size_t steps = 1;
  bool emit_jump_times = false;
  SchemeVariant variant = SchemeVariant::IVi;
};

/// One simulated trajectory on the grid.
struct PathRecord {
  std::vector<double> lambda_inc;
  std::vector<std::uint32_t> n_inc;
  /// Resolvent scheme only: Z increments N - xi.
  std::optional<std::vector<double>> z_inc;
  /// Sorted event times in [0, T), n_inc[i] of them in bin i.
  std::optional<std::vector<double>> jump_times;
  /// Resolvent scheme only: steps where the drift was capped at zero.
  std::size_t capped_steps = 0;

  [[nodiscard]] double total_lambda() const;
  [[nodiscard]] std::uint64_t total_count() const;
};

/// Per-factor memory of the Markovian recursion.
struct MarkovState {
  std::vector<double> y;
  std::vector<double> decay;
};

/// Substream used for jump-time uniforms, so that requesting jump times never
/// perturbs the counts and intensities of a path.
inline constexpr std::uint16_t kJumpTimeSubstream = 1;

/// A validated scheme with all grid weights precomputed.
///
/// Paths are simulated in batches of kLanes in a structure-of-arrays layout,
/// so the O(n^2) convolution vectorizes across paths. A single path runs
/// through the same code with the other lanes idle, which makes every path's
/// output independent of how paths are grouped.
class GridScheme {
 public:
  static constexpr std::size_t kLanes = 8;
  /// Steps whose lagged sums share one sweep over the history.
  static constexpr std::size_t kBlock = 8;

  explicit GridScheme(SchemeConfig cfg);

  [[nodiscard]] const SchemeConfig& config() const { return cfg_; }
  /// Kernel weights k_j, or resolvent weights r_j for ResolventIVi.
  [[nodiscard]] const Grid& grid() const { return grid_; }
  /// Delta G0 per step, or Delta G0R for ResolventIVi.
  [[nodiscard]] const std::vector<double>& drift_increments() const { return drift_; }
  [[nodiscard]] double k0() const { return grid_.weights.front(); }

  PathRecord simulate(RngStream& r) const;

  /// Simulates paths first .. first + count - 1 of `seed`, each on its own
  /// stream RngStream(seed, path index). `sink` is called once per path in
  /// increasing index order.
  void simulate_range(std::uint64_t seed, std::uint64_t first, std::size_t count,
                      const std::function<void(std::uint64_t, PathRecord&&)>& sink) const;

 private:
  void run_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const;
  void run_convolution_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const;
  void run_markov_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const;
  void emit_jump_times(RngStream& r, PathRecord& rec) const;

  SchemeConfig cfg_;
  Grid grid_;
  std::vector<double> drift_;
  // grid_.weights followed by kBlock zeros.
  std::vector<double> padded_weights_;
  // Markov data: per factor, the decay exp(-b_k dt) and first lag weight.
  std::vector<double> factor_decay_;
  std::vector<double> factor_k1_;
};

/// Algorithm entry points; each validates `cfg.variant`.
PathRecord simulate_ivi(const SchemeConfig& cfg, RngStream& r);
PathRecord simulate_resolvent_ivi(const SchemeConfig& cfg, RngStream& r);
PathRecord simulate_explicit(const SchemeConfig& cfg, RngStream& r);
PathRecord simulate_markov(const SchemeConfig& cfg, RngStream& r);

/// Left-endpoint intensity lambda(t_i) = g0(t_i) + sum_{j<i} K(t_i - t_j) N_j, i = 0..n.
std::vector<double> reconstruct_intensity(const PathRecord& p, const KernelSpec& k, const Baseline& g,
                                          double horizon);

}  // namespace hawkes
