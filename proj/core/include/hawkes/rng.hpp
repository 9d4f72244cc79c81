#pragma once

#include <array>
#include <cstdint>

namespace hawkes {

/// One Philox4x32-10 block: 10 rounds of the counter-based bijection.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Deterministic random stream addressed by (seed, stream_id, substream).
///
/// The seed is the Philox key; the stream id and substream occupy the upper
/// counter words, the block index the lower ones. Distinct addresses therefore
/// never share a Philox block, and the same address always reproduces the same
/// sequence. A stream holds 2^48 blocks (2^49 64-bit draws).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint16_t substream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on the open interval (0, 1).
  double uniform_open();

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }
  /// Number of 64-bit words consumed so far.
  [[nodiscard]] std::uint64_t draws() const { return draws_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint16_t substream_;
  std::uint64_t block_ = 0;
  std::uint64_t draws_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int cursor_ = 4;
};

/// Inverse Gaussian parameters: mean mu >= 0 and shape lambda > 0.
/// lambda = +inf is the point mass at mu; mu = 0 is the point mass at 0.
struct IGParams {
  double mu;
  double lambda;
};

/// Michael-Schucany-Haas transformation with one normal and one uniform draw.
/// The degenerate cases mu = 0 and lambda = inf consume no draws.
double sample_inverse_gaussian(RngStream& r, IGParams p);

/// Poisson variate. Sequential inversion below mean 10, PTRS transformed
/// rejection above.
std::uint64_t sample_poisson(RngStream& r, double mean);

double sample_exponential(RngStream& r, double rate);
double sample_uniform(RngStream& r, double a, double b);
/// Standard normal by inversion of one open uniform.
double sample_normal(RngStream& r);

}  // namespace hawkes
