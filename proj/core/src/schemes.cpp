#include "hawkes/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <variant>

#include "hawkes/errors.hpp"

namespace hawkes {
namespace {

constexpr std::size_t L = GridScheme::kLanes;

constexpr std::size_t B = GridScheme::kBlock;

using LaneVec = double __attribute__((vector_size(L * sizeof(double))));

// part[r*L + p] = sum_{j<i0} w[i0 + r - j] hist[j*L + p] for r < B. Each history
// row is loaded once per block of B steps; w must be padded by B zeros.
void block_lagged_sums(const double* w, const double* hist, std::size_t i0, double* part) {
  LaneVec acc[B] = {};
  for (std::size_t j = 0; j < i0; ++j) {
    LaneVec h;
    std::memcpy(&h, hist + j * L, sizeof(h));
    const double* wj = w + (i0 - j);
    for (std::size_t r = 0; r < B; ++r) {
      acc[r] += wj[r] * h;
    }
  }
  std::memcpy(part, acc, sizeof(acc));
}

std::uint32_t to_count(std::uint64_t k) {
  if (k > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("scheme: per-step jump count exceeds 2^32 - 1");
  }
  return static_cast<std::uint32_t>(k);
}

// One implicit step: xi ~ IG(alpha / (1 - k0), (alpha / k0)^2), N ~ Poisson(xi).
std::uint32_t ivi_step(RngStream& r, double alpha, double k0) {
  if (alpha == 0.0) {
    return 0;
  }
  const double shape = k0 > 0.0 ? (alpha / k0) * (alpha / k0) : std::numeric_limits<double>::infinity();
  const double xi = sample_inverse_gaussian(r, {alpha / (1.0 - k0), shape});
  return to_count(sample_poisson(r, xi));
}

void reset_record(PathRecord& rec, std::size_t n, bool with_z) {
  rec.lambda_inc.assign(n, 0.0);
  rec.n_inc.assign(n, 0);
  if (with_z) {
    rec.z_inc.emplace(n, 0.0);
  } else {
    rec.z_inc.reset();
  }
  rec.jump_times.reset();
  rec.capped_steps = 0;
}

void require_variant(const SchemeConfig& cfg, std::initializer_list<SchemeVariant> allowed,
                     const char* fn) {
  for (SchemeVariant v : allowed) {
    if (cfg.variant == v) {
      return;
    }
  }
  throw ConfigError(std::string(fn) + ": scheme variant " + to_string(cfg.variant) + " not handled here");
}

}  // namespace

std::string to_string(SchemeVariant v) {
  switch (v) {
    case SchemeVariant::IVi: return "ivi";
    case SchemeVariant::ResolventIVi: return "resolvent_ivi";
    case SchemeVariant::ExplicitII: return "explicit";
    case SchemeVariant::MarkovIVi: return "markov_ivi";
    case SchemeVariant::MultifactorIVi: return "multifactor_ivi";
  }
  return "unknown";
}

SchemeVariant scheme_from_string(const std::string& name) {
  for (SchemeVariant v : {SchemeVariant::IVi, SchemeVariant::ResolventIVi, SchemeVariant::ExplicitII,
                          SchemeVariant::MarkovIVi, SchemeVariant::MultifactorIVi}) {
    if (to_string(v) == name) {
      return v;
    }
  }
  throw ConfigError("unknown scheme '" + name +
                    "' (expected ivi, resolvent_ivi, explicit, markov_ivi or multifactor_ivi)");
}

double PathRecord::total_lambda() const {
  return std::accumulate(lambda_inc.begin(), lambda_inc.end(), 0.0);
}

std::uint64_t PathRecord::total_count() const {
  return std::accumulate(n_inc.begin(), n_inc.end(), std::uint64_t{0});
}

GridScheme::GridScheme(SchemeConfig cfg) : cfg_(std::move(cfg)) {
  if (!(cfg_.horizon > 0.0) || !std::isfinite(cfg_.horizon)) {
    throw ConfigError("scheme: horizon must be positive and finite");
  }
  if (cfg_.steps == 0) {
    throw ConfigError("scheme: steps must be positive");
  }
  const std::size_t n = cfg_.steps;
  const double dt = cfg_.horizon / static_cast<double>(n);

  switch (cfg_.variant) {
    case SchemeVariant::ResolventIVi: {
      if (!has_resolvent(cfg_.kernel)) {
        throw ConfigError("resolvent_ivi: no closed-form resolvent for " + cfg_.kernel.describe());
      }
      grid_ = resolvent_grid_weights(cfg_.kernel, cfg_.horizon, n);
      drift_ = g0r_increments(cfg_.baseline, cfg_.kernel, cfg_.horizon, n);
      break;
    }
    case SchemeVariant::MarkovIVi: {
      const auto* k = std::get_if<ExponentialKernel>(&cfg_.kernel.params());
      if (k == nullptr) {
        throw ConfigError("markov_ivi: requires an exponential kernel, got " + cfg_.kernel.describe());
      }
      factor_decay_ = {std::exp(-k->b * dt)};
      factor_k1_ = {interval_integral(cfg_.kernel, dt, 2.0 * dt)};
      grid_ = grid_weights(cfg_.kernel, cfg_.horizon, n);
      drift_ = cfg_.baseline.increments(cfg_.horizon, n);
      break;
    }
    case SchemeVariant::MultifactorIVi: {
      const auto* k = std::get_if<SumOfExponentialsKernel>(&cfg_.kernel.params());
      if (k == nullptr) {
        throw ConfigError("multifactor_ivi: requires a sum-of-exponentials kernel, got " +
                          cfg_.kernel.describe());
      }
      for (std::size_t f = 0; f < k->c.size(); ++f) {
        const KernelSpec factor = KernelSpec::exponential(k->c[f], k->b[f]);
        factor_decay_.push_back(std::exp(-k->b[f] * dt));
        factor_k1_.push_back(interval_integral(factor, dt, 2.0 * dt));
      }
      grid_ = grid_weights(cfg_.kernel, cfg_.horizon, n);
      drift_ = cfg_.baseline.increments(cfg_.horizon, n);
      break;
    }
    case SchemeVariant::IVi:
    case SchemeVariant::ExplicitII: {
      grid_ = grid_weights(cfg_.kernel, cfg_.horizon, n);
      drift_ = cfg_.baseline.increments(cfg_.horizon, n);
      break;
    }
  }
  padded_weights_ = grid_.weights;
  padded_weights_.resize(n + kBlock, 0.0);
  for (double d : drift_) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw DomainError("scheme: baseline increments must be finite and >= 0");
    }
  }
}

void GridScheme::emit_jump_times(RngStream& r, PathRecord& rec) const {
  std::vector<double> times;
  times.reserve(rec.total_count());
  for (std::size_t i = 0; i < cfg_.steps; ++i) {
    const std::uint32_t cnt = rec.n_inc[i];
    if (cnt == 0) {
      continue;
    }
    const double lo = grid_.time(i);
    const double hi = grid_.time(i + 1);
    const auto begin = times.size();
    for (std::uint32_t k = 0; k < cnt; ++k) {
      double t = lo + (hi - lo) * r.uniform();
      if (t >= hi) {
        t = std::nextafter(hi, lo);
      }
      times.push_back(t);
    }
    std::sort(times.begin() + static_cast<std::ptrdiff_t>(begin), times.end());
  }
  rec.jump_times = std::move(times);
}

void GridScheme::run_convolution_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const {
  const std::size_t n = cfg_.steps;
  const double* w = padded_weights_.data();
  const double w0 = w[0];
  const SchemeVariant variant = cfg_.variant;
  const bool resolvent = variant == SchemeVariant::ResolventIVi;

  std::vector<double> hist(n * L, 0.0);
  for (std::size_t p = 0; p < count; ++p) {
    reset_record(out[p], n, resolvent);
  }
  alignas(64) double part[B * L];
  alignas(64) double conv[L];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i0 = i - i % B;
    if (i == i0) {
      block_lagged_sums(w, hist.data(), i0, part);
    }
    for (std::size_t p = 0; p < L; ++p) {
      double c = part[(i - i0) * L + p];
      for (std::size_t j = i0; j < i; ++j) {
        c += w[i - j] * hist[j * L + p];
      }
      conv[p] = c;
    }
    for (std::size_t p = 0; p < count; ++p) {
      PathRecord& rec = out[p];
      double alpha = drift_[i] + conv[p];
      switch (variant) {
        case SchemeVariant::IVi: {
          const std::uint32_t cnt = ivi_step(rngs[p], alpha, w0);
          rec.n_inc[i] = cnt;
          rec.lambda_inc[i] = alpha + w0 * cnt;
          hist[i * L + p] = cnt;
          break;
        }
        case SchemeVariant::ExplicitII: {
          const std::uint32_t cnt = to_count(sample_poisson(rngs[p], alpha));
          rec.n_inc[i] = cnt;
          rec.lambda_inc[i] = alpha + w0 * cnt;
          hist[i * L + p] = cnt;
          break;
        }
        case SchemeVariant::ResolventIVi: {
          if (alpha < 0.0) {
            alpha = 0.0;
            ++rec.capped_steps;
          }
          double xi = 0.0;
          if (alpha > 0.0) {
            const double shape =
                w0 > 0.0 ? (alpha / w0) * (alpha / w0) : std::numeric_limits<double>::infinity();
            xi = sample_inverse_gaussian(rngs[p], {alpha, shape});
          }
          const std::uint32_t cnt = xi > 0.0 ? to_count(sample_poisson(rngs[p], xi)) : 0;
          const double z = static_cast<double>(cnt) - xi;
          rec.n_inc[i] = cnt;
          rec.lambda_inc[i] = (alpha + w0 * cnt) / (1.0 + w0);
          (*rec.z_inc)[i] = z;
          hist[i * L + p] = z;
          break;
        }
        default:
          break;
      }
    }
  }
}

void GridScheme::run_markov_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const {
  const std::size_t n = cfg_.steps;
  const std::size_t m = factor_decay_.size();
  const double k0 = grid_.weights.front();
  std::vector<double> y(m * L, 0.0);
  for (std::size_t p = 0; p < count; ++p) {
    reset_record(out[p], n, false);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < count; ++p) {
      double memory = 0.0;
      for (std::size_t f = 0; f < m; ++f) {
        memory += y[f * L + p];
      }
      const double alpha = drift_[i] + memory;
      const std::uint32_t cnt = ivi_step(rngs[p], alpha, k0);
      out[p].n_inc[i] = cnt;
      out[p].lambda_inc[i] = alpha + k0 * cnt;
      for (std::size_t f = 0; f < m; ++f) {
        y[f * L + p] = factor_decay_[f] * y[f * L + p] + factor_k1_[f] * cnt;
      }
    }
  }
}

void GridScheme::run_lanes(RngStream* rngs, std::size_t count, PathRecord* out) const {
  if (cfg_.variant == SchemeVariant::MarkovIVi || cfg_.variant == SchemeVariant::MultifactorIVi) {
    run_markov_lanes(rngs, count, out);
  } else {
    run_convolution_lanes(rngs, count, out);
  }
  if (cfg_.emit_jump_times) {
    for (std::size_t p = 0; p < count; ++p) {
      RngStream jr(rngs[p].seed(), rngs[p].stream_id(), kJumpTimeSubstream);
      emit_jump_times(jr, out[p]);
    }
  }
}

PathRecord GridScheme::simulate(RngStream& r) const {
  PathRecord rec;
  run_lanes(&r, 1, &rec);
  return rec;
}

void GridScheme::simulate_range(std::uint64_t seed, std::uint64_t first, std::size_t count,
                                const std::function<void(std::uint64_t, PathRecord&&)>& sink) const {
  std::vector<RngStream> rngs;
  rngs.reserve(L);
  PathRecord recs[L];
  for (std::size_t done = 0; done < count;) {
    const std::size_t lanes = std::min(L, count - done);
    rngs.clear();
    for (std::size_t p = 0; p < lanes; ++p) {
      rngs.emplace_back(seed, first + done + p);
    }
    run_lanes(rngs.data(), lanes, recs);
    for (std::size_t p = 0; p < lanes; ++p) {
      sink(first + done + p, std::move(recs[p]));
    }
    done += lanes;
  }
}

PathRecord simulate_ivi(const SchemeConfig& cfg, RngStream& r) {
  require_variant(cfg, {SchemeVariant::IVi}, "simulate_ivi");
  return GridScheme(cfg).simulate(r);
}

PathRecord simulate_resolvent_ivi(const SchemeConfig& cfg, RngStream& r) {
  require_variant(cfg, {SchemeVariant::ResolventIVi}, "simulate_resolvent_ivi");
  return GridScheme(cfg).simulate(r);
}

PathRecord simulate_explicit(const SchemeConfig& cfg, RngStream& r) {
  require_variant(cfg, {SchemeVariant::ExplicitII}, "simulate_explicit");
  return GridScheme(cfg).simulate(r);
}

PathRecord simulate_markov(const SchemeConfig& cfg, RngStream& r) {
  require_variant(cfg, {SchemeVariant::MarkovIVi, SchemeVariant::MultifactorIVi}, "simulate_markov");
  return GridScheme(cfg).simulate(r);
}

std::vector<double> reconstruct_intensity(const PathRecord& p, const KernelSpec& k, const Baseline& g,
                                          double horizon) {
  const std::size_t n = p.n_inc.size();
  const double dt = horizon / static_cast<double>(n);
  std::vector<double> lag(n + 1, 0.0);
  for (std::size_t l = 1; l <= n; ++l) {
    lag[l] = kernel_eval(k, static_cast<double>(l) * dt);
  }
  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double s = g.rate(horizon * static_cast<double>(i) / static_cast<double>(n));
    for (std::size_t j = 0; j < i; ++j) {
      if (p.n_inc[j] != 0) {
        s += lag[i - j] * p.n_inc[j];
      }
    }
    out[i] = s;
  }
  return out;
}

}  // namespace hawkes
