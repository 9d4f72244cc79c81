#include "hawkes/rng.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "hawkes/errors.hpp"

namespace hawkes {
namespace {

constexpr std::uint32_t kM0 = 0xD2511F53U;
constexpr std::uint32_t kM1 = 0xCD9E8D57U;
constexpr std::uint32_t kW0 = 0x9E3779B9U;
constexpr std::uint32_t kW1 = 0xBB67AE85U;

constexpr std::uint64_t kBlockLimit = std::uint64_t{1} << 48;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

constexpr double kPoissonInversionLimit = 10.0;

// Boost would otherwise evaluate in long double, which is several times slower.
using FastDouble = boost::math::policies::policy<boost::math::policies::promote_double<false>>;

std::uint64_t poisson_inversion(RngStream& r, double mean) {
  const double u = r.uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  // The cap only triggers when rounding keeps the cdf below u.
  while (u > cdf && k < 1000) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

// Hoermann's PTRS, in the constants used by numpy.
std::uint64_t poisson_ptrs(RngStream& r, double lam) {
  const double slam = std::sqrt(lam);
  const double loglam = std::log(lam);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = r.uniform() - 0.5;
    const double v = r.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + lam + 0.43);
    if (us >= 0.07 && v <= vr) {
      return static_cast<std::uint64_t>(k);
    }
    if (k < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
        -lam + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint16_t substream)
    : seed_(seed), stream_id_(stream_id), substream_(substream) {}

void RngStream::refill() {
  if (block_ >= kBlockLimit) {
    throw OverflowError("RngStream: stream exhausted");
  }
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_),
      static_cast<std::uint32_t>(block_ >> 32) | (std::uint32_t{substream_} << 16),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32),
  };
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(ctr, key);
  ++block_;
  cursor_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (cursor_ >= 4) {
    refill();
  }
  const std::uint64_t lo = buffer_[cursor_];
  const std::uint64_t hi = buffer_[cursor_ + 1];
  cursor_ += 2;
  ++draws_;
  return lo | (hi << 32);
}

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv; }

double RngStream::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * kTwoPow53Inv;
}

double sample_normal(RngStream& r) {
  const double u = r.uniform_open();
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u, FastDouble());
}

double sample_inverse_gaussian(RngStream& r, IGParams p) {
  if (!(p.lambda > 0.0)) {
    throw DomainError("inverse Gaussian: shape lambda must be > 0");
  }
  if (!(p.mu >= 0.0) || !std::isfinite(p.mu)) {
    throw DomainError("inverse Gaussian: mean mu must be finite and >= 0");
  }
  if (p.mu == 0.0 || std::isinf(p.lambda)) {
    return p.mu;
  }
  const double xi = sample_normal(r);
  const double eta = r.uniform();
  // mu + mu^2 Y / (2 lambda) - (mu / 2 lambda) sqrt(4 mu lambda Y + mu^2 Y^2), rewritten
  // as mu / (1 + a + sqrt(a^2 + 2a)) with a = mu Y / (2 lambda) to avoid cancellation.
  const double a = p.mu * xi * xi / (2.0 * p.lambda);
  const double x = p.mu / (1.0 + a + std::sqrt(a * a + 2.0 * a));
  if (eta * (p.mu + x) <= p.mu) {
    return x;
  }
  return p.mu * (p.mu / x);
}

std::uint64_t sample_poisson(RngStream& r, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("poisson: mean must be finite and >= 0");
  }
  if (mean == 0.0) {
    return 0;
  }
  if (mean < kPoissonInversionLimit) {
    return poisson_inversion(r, mean);
  }
  return poisson_ptrs(r, mean);
}

double sample_exponential(RngStream& r, double rate) {
  if (!(rate > 0.0)) {
    throw DomainError("exponential: rate must be > 0");
  }
  return -std::log(r.uniform_open()) / rate;
}

double sample_uniform(RngStream& r, double a, double b) {
  if (!(a <= b)) {
    throw DomainError("uniform: need a <= b");
  }
  if (a == b) {
    return a;
  }
  return a + (b - a) * r.uniform();
}

}  // namespace hawkes
