#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hawkes/hawkes.hpp"

namespace hawkes::cli {

/// A grid scheme or one of the exact samplers.
struct SchemeId {
  std::optional<SchemeVariant> grid;
  ExactMethod exact = ExactMethod::Population;

  [[nodiscard]] bool is_exact() const { return !grid.has_value(); }
  [[nodiscard]] std::string name() const;
};

SchemeId scheme_id_from_string(const std::string& name);

struct Outputs {
  std::vector<double> laplace_w;
  bool marginals = false;
  bool time_change = false;
  bool timing = false;
  std::vector<std::uint64_t> trajectories;
};

struct ExperimentConfig {
  std::vector<SchemeId> schemes;
  KernelSpec kernel = KernelSpec::zero();
  Baseline baseline = Baseline::constant(0.0);
  double horizon = 1.0;
  std::vector<std::size_t> steps;
  std::size_t paths = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::optional<double> thinning_epsilon;
  Outputs outputs;
  std::filesystem::path output_dir = "out";
  /// Parsed document, echoed into the summary.
  nlohmann::json source;
};

/// Parses and validates a config document. Errors are ConfigError with the
/// offending field in the message.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& file);

struct StatRow {
  std::string statistic;
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

struct BatchResult {
  std::string scheme;
  /// Grid size; 0 for exact samplers.
  std::size_t n = 0;
  std::size_t paths = 0;
  unsigned threads = 0;
  double wall_clock_seconds = 0.0;
  double mean_events = 0.0;
  /// Exact samplers only: mean candidates (thinning) or inverse-map calls.
  double mean_candidates = 0.0;
  std::vector<StatRow> stats;
  /// Set when the (scheme, n) pair was skipped.
  std::optional<std::string> error;
  bool ill_posed = false;

  // Per-path samples in path order, kept when marginals are requested.
  std::vector<double> count_T;
  std::vector<double> lambda_T;
  // Per-path time-change KS results, kept when time_change is requested.
  std::vector<KSResult> time_change;
};

/// Simulates every (scheme, n) pair and computes the requested statistics.
/// Well-posedness failures are recorded per pair and do not stop the run.
std::vector<BatchResult> run_experiment(const ExperimentConfig& cfg, unsigned threads);

/// results.csv: scheme,n,statistic,value,std_error,n_samples.
void write_results_csv(const std::vector<BatchResult>& results, const std::filesystem::path& file);
/// timing.csv: wall clock, event counts and speedup against the reference scheme.
void write_timing_csv(const std::vector<BatchResult>& results, const std::filesystem::path& file);
void write_summary_json(const ExperimentConfig& cfg, const std::vector<BatchResult>& results,
                        const std::filesystem::path& file);

/// marginals_<scheme>_n<n>.csv (path,N_T,Lambda_T) and
/// timechange_<scheme>_n<n>.csv (path,events,ks_statistic,p_value).
void write_path_samples(const std::vector<BatchResult>& results, const std::filesystem::path& dir);

/// t,N,Lambda,lambda on the n+1 grid points for one path of a grid scheme.
void emit_trajectory(const ExperimentConfig& cfg, SchemeVariant variant, std::size_t steps,
                     std::uint64_t path, const std::filesystem::path& file);

/// %.17g
std::string format_double(double x);

}  // namespace hawkes::cli
