#pragma once

#include <cmath>
#include <cstdint>

namespace lefvol {

/// How a numeric result was obtained. Exact-tier values carry zero standard
/// error; Monte Carlo values report one standard error of the estimator.
enum class Provenance { kExact, kMonteCarlo };

/// A number together with its provenance. Sums propagate standard errors in
/// quadrature and stay exact only when every ingredient is exact.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  Provenance provenance = Provenance::kExact;

  static Estimate exact(double v) { return {v, 0.0, Provenance::kExact}; }
  static Estimate monte_carlo(double v, double se) {
    return {v, se, Provenance::kMonteCarlo};
  }

  bool is_exact() const { return provenance == Provenance::kExact; }

  /// value + scale * other.value, variances added in quadrature.
  void accumulate(const Estimate& other, double scale = 1.0) {
    value += scale * other.value;
    std_error = std::sqrt(std_error * std_error +
                          scale * scale * other.std_error * other.std_error);
    if (!other.is_exact()) provenance = Provenance::kMonteCarlo;
  }
};

inline Estimate operator-(const Estimate& a, const Estimate& b) {
  Estimate out = a;
  out.accumulate(b, -1.0);
  return out;
}

/// Comparison tolerance: 1e-9 absolute for exact-tier values, three combined
/// standard errors once any Monte Carlo ingredient is involved.
inline double comparison_tolerance(const Estimate& a, const Estimate& b,
                                   double exact_tol = 1e-9) {
  const double se = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  return std::max(exact_tol, 3.0 * se);
}

/// Monte Carlo budget: sample count and base seed. Derived streams keep the
/// result independent of how samples are chunked.
struct MonteCarloConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20240814;
};

}  // namespace lefvol
