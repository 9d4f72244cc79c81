#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hawkes {

// ---------------------------------------------------------------------------
// Kernel families
//
// Every cataloged family carries a closed-form integrated kernel
// Kbar(t) = int_0^t K(s) ds, which is what the grid schemes consume.
// The Mittag-Leffler families are written with a separate argument rate so
// that they are closed under taking resolvents:
//
//   MittagLeffler(c, rate, alpha)(t)  = c t^(alpha-1) E_{alpha,alpha}(rate t^alpha)
//   TemperedMittagLeffler adds the factor exp(-b t).
//
// The resolvent of the fractional kernel c t^(alpha-1)/Gamma(alpha) is then
// MittagLeffler(c, c, alpha), and the resolvent of MittagLeffler(c, rate, alpha)
// is MittagLeffler(c, rate + c, alpha).
// ---------------------------------------------------------------------------

/// K(t) = c exp(-b t); b may be negative (growing kernel).
struct ExponentialKernel {
  double c;
  double b;
};

/// K(t) = c t^(alpha-1) / Gamma(alpha); singular at 0 when alpha < 1.
struct FractionalKernel {
  double c;
  double alpha;
};

/// K(t) = c exp(-b t) t^(alpha-1) / Gamma(alpha).
struct GammaKernel {
  double c;
  double b;
  double alpha;
};

struct MittagLefflerKernel {
  double c;
  double rate;
  double alpha;
};

struct TemperedMittagLefflerKernel {
  double c;
  double rate;
  double b;
  double alpha;
};

/// K(t) = sum_k c_k exp(-b_k t).
struct SumOfExponentialsKernel {
  std::vector<double> c;
  std::vector<double> b;
};

/// User-supplied kernel. `integrated` is strongly recommended: without it the
/// integrated kernel is computed by adaptive quadrature, which is only
/// trustworthy for bounded integrands. `envelope(t, horizon)` must return a
/// bound on sup_{s in [t, horizon]} K(s); it is only needed for thinning.
struct CustomKernel {
  std::function<double(double)> eval;
  std::function<double(double)> integrated;
  std::function<double(double, double)> envelope;
  bool singular_at_zero = false;
};

enum class KernelFamily {
  Exponential,
  Fractional,
  Gamma,
  MittagLeffler,
  TemperedMittagLeffler,
  SumOfExponentials,
  Custom,
};

std::string to_string(KernelFamily family);

/// Validated, immutable description of a memory kernel.
class KernelSpec {
 public:
  using Variant = std::variant<ExponentialKernel, FractionalKernel, GammaKernel, MittagLefflerKernel,
                               TemperedMittagLefflerKernel, SumOfExponentialsKernel, CustomKernel>;

  static KernelSpec exponential(double c, double b);
  static KernelSpec fractional(double c, double alpha);
  /// Fractional kernel c t^(H-1/2) / Gamma(H+1/2) parameterized by H in (0,1).
  static KernelSpec fractional_hurst(double c, double hurst);
  static KernelSpec gamma(double c, double b, double alpha);
  static KernelSpec mittag_leffler(double c, double rate, double alpha);
  static KernelSpec tempered_mittag_leffler(double c, double rate, double b, double alpha);
  static KernelSpec sum_of_exponentials(std::vector<double> c, std::vector<double> b);
  static KernelSpec custom(CustomKernel kernel);
  /// K = 0, represented as an exponential kernel with zero amplitude.
  static KernelSpec zero();

  [[nodiscard]] KernelFamily family() const;
  [[nodiscard]] const Variant& params() const { return params_; }
  /// True when the kernel vanishes identically (all amplitudes zero).
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool singular_at_zero() const;
  [[nodiscard]] std::string describe() const;

 private:
  explicit KernelSpec(Variant v) : params_(std::move(v)) {}
  Variant params_;
};

// ---------------------------------------------------------------------------
// Exogenous baseline g0 and its integral G0
// ---------------------------------------------------------------------------

/// Custom baseline. `integrated` (G0) is mandatory: the schemes never integrate
/// g0 numerically. `inverse_integrated` is used by the population sampler
/// (numeric inversion otherwise); `running_max(t, horizon)` must bound
/// sup_{u in [t, horizon]} g0(u) and is required by thinning.
struct CustomBaseline {
  std::function<double(double)> rate;
  std::function<double(double)> integrated;
  std::function<double(double)> inverse_integrated;
  std::function<double(double, double)> running_max;
};

class Baseline {
 public:
  static Baseline constant(double mu);
  static Baseline custom(CustomBaseline baseline);

  [[nodiscard]] bool is_constant() const { return custom_ == nullptr; }
  [[nodiscard]] double mu() const { return mu_; }
  [[nodiscard]] double rate(double t) const;
  [[nodiscard]] double integrated(double t) const;
  /// Smallest t in [0, horizon] with G0(t) = x (x must not exceed G0(horizon)).
  [[nodiscard]] double inverse_integrated(double x, double horizon) const;
  [[nodiscard]] double running_max(double t, double horizon) const;
  /// G0(t_{i+1}) - G0(t_i) on the uniform grid; mu T / n exactly for constants.
  [[nodiscard]] std::vector<double> increments(double horizon, std::size_t steps) const;
  [[nodiscard]] std::string describe() const;

 private:
  Baseline() = default;
  double mu_ = 0.0;
  std::shared_ptr<const CustomBaseline> custom_;
};

// ---------------------------------------------------------------------------
// Grids of integrated weights
// ---------------------------------------------------------------------------

enum class GridKind { Kernel, Resolvent };

/// Uniform partition of [0, horizon] into `steps` intervals, together with the
/// integrals of the generating kernel over [t_j, t_{j+1}].
struct Grid {
  double horizon = 0.0;
  std::size_t steps = 0;
  std::vector<double> weights;
  GridKind kind = GridKind::Kernel;

  [[nodiscard]] double step() const { return horizon / static_cast<double>(steps); }
  [[nodiscard]] double time(std::size_t i) const {
    return horizon * static_cast<double>(i) / static_cast<double>(steps);
  }
};

/// Pointwise K(t). Requires t > 0 for kernels singular at the origin.
double kernel_eval(const KernelSpec& k, double t);

/// Kbar(t) = int_0^t K(s) ds.
double integrated_kernel(const KernelSpec& k, double t);

/// int_a^b K(s) ds, using cancellation-free forms where the family allows.
double interval_integral(const KernelSpec& k, double a, double b);

/// int_0^t Kbar(s) ds.
double double_integrated_kernel(const KernelSpec& k, double t);

/// Smallest s in [0, upper] with Kbar(s) = x; returns `upper` if x >= Kbar(upper).
/// Closed form for exponential and fractional kernels, bracketed root finding
/// (absolute tolerance 1e-12) otherwise.
double inverse_integrated_kernel(const KernelSpec& k, double x, double upper);

/// Nonincreasing bound Km(t) >= sup_{s in [t, horizon]} K(s), used by thinning.
/// Throws UnsupportedError when no envelope is known for the family.
double kernel_envelope(const KernelSpec& k, double t, double horizon);

/// Weights k_j = int_{t_j}^{t_{j+1}} K for j = 0..n-1. Throws WellPosednessError
/// when k_0 >= 1.
Grid grid_weights(const KernelSpec& k, double horizon, std::size_t steps);

/// True when resolvent_of(k) is available in closed form.
bool has_resolvent(const KernelSpec& k);

/// Resolvent of the second kind R, with R * K = K * R = R - K.
KernelSpec resolvent_of(const KernelSpec& k);

/// Weights r_j = int_{t_j}^{t_{j+1}} R of the resolvent.
Grid resolvent_grid_weights(const KernelSpec& k, double horizon, std::size_t steps);

/// G0R(t) = G0(t) + int_0^t R(t-s) G0(s) ds.
double resolvent_baseline(const Baseline& g, const KernelSpec& k, double t);

/// G0R(t_{i+1}) - G0R(t_i) for i = 0..n-1.
std::vector<double> g0r_increments(const Baseline& g, const KernelSpec& k, double horizon,
                                   std::size_t steps);

}  // namespace hawkes
