#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "hawkes/exact.hpp"
#include "hawkes/schemes.hpp"

namespace hawkes {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t paths = 0;
  /// 0 selects HAWKES_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
};

/// Resolves a requested worker count: explicit value, then the HAWKES_THREADS
/// environment variable, then std::thread::hardware_concurrency().
unsigned resolve_thread_count(unsigned requested);

/// Called once per path from worker threads. Calls for distinct path indices
/// may run concurrently, so sinks should write to per-index storage.
using PathSink = std::function<void(std::uint64_t path, PathRecord&& rec)>;
using EventSink = std::function<void(std::uint64_t path, EventList&& events, const SamplerStats& stats)>;

/// Runs paths 0 .. paths-1, path p on RngStream(seed, p). Work is split into
/// lane batches that are statically assigned to threads, so each path's
/// output is independent of the thread count.
void run_scheme_paths(const GridScheme& scheme, const RunOptions& opts, const PathSink& sink);

enum class ExactMethod { Population, Ogata };

void run_exact_paths(ExactMethod method, const KernelSpec& k, const Baseline& g, double horizon,
                     const RunOptions& opts, const EventSink& sink,
                     std::optional<double> epsilon = std::nullopt);

}  // namespace hawkes
