#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiment.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hawkes;
using namespace hawkes::cli;

constexpr int kExitConfig = 2;
constexpr int kExitIllPosed = 3;

enum class Mode { All, Laplace, Marginals, TimeChange, Bench, Trajectory };

struct Args {
  std::string config;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::vector<double> w;
  std::vector<std::uint64_t> path;
  Mode mode = Mode::All;
};

// Explicit flag, then HAWKES_THREADS, then the config file, then the hardware.
unsigned pick_threads(const Args& a, const ExperimentConfig& cfg) {
  if (a.threads) return resolve_thread_count(*a.threads);
  const char* env = std::getenv("HAWKES_THREADS");
  if (env != nullptr && *env != '\0') return resolve_thread_count(0);
  return resolve_thread_count(cfg.threads);
}

// Subcommands narrow the config's outputs to a single artifact.
void apply_mode(const Args& a, ExperimentConfig& cfg) {
  Outputs& o = cfg.outputs;
  const Outputs requested = o;
  switch (a.mode) {
    case Mode::All:
      break;
    case Mode::Laplace:
      o = Outputs{};
      o.laplace_w = a.w.empty() ? requested.laplace_w : a.w;
      if (o.laplace_w.empty()) throw ConfigError("outputs.laplace.w: no w values (set them in the config or pass --w)");
      for (double w : o.laplace_w) {
        if (w > 0.0) throw ConfigError("--w: values must be <= 0");
      }
      break;
    case Mode::Marginals:
      o = Outputs{};
      o.marginals = true;
      break;
    case Mode::TimeChange:
      o = Outputs{};
      o.time_change = true;
      break;
    case Mode::Bench:
      o = Outputs{};
      o.timing = true;
      break;
    case Mode::Trajectory:
      o = Outputs{};
      o.trajectories = a.path.empty() ? requested.trajectories : a.path;
      if (o.trajectories.empty()) o.trajectories.push_back(0);
      break;
  }
}

int write_trajectories(const ExperimentConfig& cfg) {
  int status = 0;
  for (const SchemeId& s : cfg.schemes) {
    if (s.is_exact()) continue;
    for (std::size_t n : cfg.steps) {
      for (std::uint64_t p : cfg.outputs.trajectories) {
        const std::string name =
            "trajectory_" + s.name() + "_n" + std::to_string(n) + "_path" + std::to_string(p) + ".csv";
        try {
          emit_trajectory(cfg, *s.grid, n, p, cfg.output_dir / name);
        } catch (const WellPosednessError& e) {
          std::cerr << "simulate: " << s.name() << " n=" << n << ": " << e.what() << '\n';
          status = kExitIllPosed;
        }
      }
    }
  }
  return status;
}

int run(const Args& a) {
  ExperimentConfig cfg = load_config(a.config);
  if (a.out) cfg.output_dir = *a.out;
  if (a.seed) cfg.seed = *a.seed;
  apply_mode(a, cfg);
  const unsigned threads = pick_threads(a, cfg);

  int status = 0;
  if (!cfg.outputs.trajectories.empty()) status = write_trajectories(cfg);
  if (a.mode == Mode::Trajectory) return status;

  const std::vector<BatchResult> results = run_experiment(cfg, threads);
  fs::create_directories(cfg.output_dir);
  write_results_csv(results, cfg.output_dir / "results.csv");
  write_summary_json(cfg, results, cfg.output_dir / "summary.json");
  write_path_samples(results, cfg.output_dir);
  if (cfg.outputs.timing) write_timing_csv(results, cfg.output_dir / "timing.csv");

  for (const BatchResult& r : results) {
    if (r.error) {
      std::cerr << "simulate: " << r.scheme << " n=" << r.n << ": " << *r.error << '\n';
      if (r.ill_posed) {
        status = kExitIllPosed;
      } else if (status == 0) {
        status = 1;
      }
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid and exact simulation of Hawkes processes"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Args a;
  app.add_option("--config", a.config, "Experiment config (JSON)")->required();
  app.add_option("--out", a.out, "Output directory, overrides output_dir");
  app.add_option("--threads", a.threads, "Worker threads, overrides HAWKES_THREADS")->check(CLI::PositiveNumber);
  app.add_option("--seed", a.seed, "Base seed, overrides the config");

  auto* laplace = app.add_subcommand("laplace", "Laplace transforms of N_T and Lambda_T");
  laplace->add_option("--w", a.w, "Transform arguments (<= 0)");
  auto* marginals = app.add_subcommand("marginals", "Moments, samples and two-sample tests of N_T and Lambda_T");
  auto* timechange = app.add_subcommand("timechange", "Time-change KS test per path");
  auto* bench = app.add_subcommand("bench", "Wall clock per (scheme, n)");
  auto* trajectory = app.add_subcommand("trajectory", "Write t, N, Lambda, lambda for single paths");
  trajectory->add_option("--path", a.path, "Path indices (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  if (*laplace) a.mode = Mode::Laplace;
  if (*marginals) a.mode = Mode::Marginals;
  if (*timechange) a.mode = Mode::TimeChange;
  if (*bench) a.mode = Mode::Bench;
  if (*trajectory) a.mode = Mode::Trajectory;

  try {
    return run(a);
  } catch (const ConfigError& e) {
    std::cerr << "simulate: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const WellPosednessError& e) {
    std::cerr << "simulate: " << e.what() << '\n';
    return kExitIllPosed;
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << '\n';
    return 1;
  }
}
