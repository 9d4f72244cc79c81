#include "hawkes/monte_carlo.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "hawkes/errors.hpp"

namespace hawkes {
namespace {

// Runs body(begin, end) over contiguous chunks of [0, total) on `threads`
// workers and rethrows the first failure.
template <class Body>
void parallel_chunks(std::size_t total, std::size_t granule, unsigned threads, Body body) {
  const std::size_t units = (total + granule - 1) / granule;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, units));
  if (workers == 1) {
    body(std::size_t{0}, total);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(total, (units * w / workers) * granule);
    const std::size_t end = std::min(total, (units * (w + 1) / workers) * granule);
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) {
    return requested;
  }
  if (const char* env = std::getenv("HAWKES_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("HAWKES_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void run_scheme_paths(const GridScheme& scheme, const RunOptions& opts, const PathSink& sink) {
  parallel_chunks(opts.paths, GridScheme::kLanes, resolve_thread_count(opts.threads),
                  [&](std::size_t begin, std::size_t end) {
                    scheme.simulate_range(opts.seed, begin, end - begin, sink);
                  });
}

void run_exact_paths(ExactMethod method, const KernelSpec& k, const Baseline& g, double horizon,
                     const RunOptions& opts, const EventSink& sink, std::optional<double> epsilon) {
  if (method == ExactMethod::Ogata) {
    // Validate the envelope up front rather than inside every worker.
    if (!(std::holds_alternative<ExponentialKernel>(k.params()))) {
      (void)kernel_envelope(k, horizon, horizon);
    }
  }
  parallel_chunks(opts.paths, 1, resolve_thread_count(opts.threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      RngStream r(opts.seed, p);
      SamplerStats stats;
      EventList e = method == ExactMethod::Population ? simulate_population(k, g, horizon, r, &stats)
                                                      : simulate_ogata(k, g, horizon, r, epsilon, &stats);
      sink(p, std::move(e), stats);
    }
  });
}

}  // namespace hawkes
