#pragma once

// Numerical evidence for the divisibility and random-sum stability
// properties of the Harris family: truncated power-series checks of infinite
// divisibility and self-decomposability, the exact gamma Harris-sum identity,
// and Monte Carlo demonstrations of the limit behaviour.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harris/distribution.hpp"
#include "harris/power_series.hpp"
#include "harris/rng.hpp"

namespace harris {

/// Coefficients below this count as negative mass.
inline constexpr double kCoefficientFloor = -1e-9;

/// PGF coefficients of s^0..s^order: pmf at lattice positions, 0 elsewhere.
PowerSeries pgf_series(const HarrisParams& params, std::size_t order);

struct DivisibilityCheck {
  bool pass = false;
  double min_coefficient = 0.0;
  std::string witness;
};

/// n-th root test. H0 is tested directly; H1 = s * H0 is infinitely divisible
/// iff its H0 counterpart is, so H1 params are tested through H0.
DivisibilityCheck id_check(const HarrisParams& params, int n, std::size_t order);

/// n-th root test of an arbitrary PGF series (e.g. a negative control).
DivisibilityCheck id_check(const PowerSeries& pgf, int n);

/// How X is thinned by c in the self-decomposability factorization.
enum class Thinning {
  /// c acts on the lattice index: Q_c(s) = P(s) / P_V(1 - c + c s^k), where
  /// P_V is the NB PGF of the index. Matches the change-of-scale argument.
  lattice,
  /// Binomial thinning of X itself: Q_c(s) = P(s) / P(1 - c + c s).
  integer,
};

/// Self-decomposability factor test for c in (0, 1). H1 fails by necessity
/// (no mass at zero) without computing anything. Both modes coincide at k = 1.
DivisibilityCheck sd_check(const HarrisParams& params, double c, std::size_t order,
                           Thinning thinning = Thinning::lattice);

/// max over t of |P_{H1(a,k)}(phi_c(t)) - (1 + a c t)^{-1/k}| with
/// phi_c(t) = (1 + c t)^{-1/k}, the gamma(c, 1/k) Laplace transform.
double gamma_harris_identity(double a, double c, std::int64_t k, std::span<const double> t_grid);

struct LimitLawPoint {
  double a = 0.0;
  std::vector<double> pgf_values;       // P_a(s) on the s grid
  double exact_lt_distance = 0.0;       // sup_t |P_a(e^{-t/a}) - (1+kt)^{-1/k}|
  double empirical_lt_distance = 0.0;   // same with the empirical LT of N_a/a
  double mean = 0.0;                    // of N_a / a
  double variance = 0.0;
  double ks_distance = 0.0;             // N_a / a vs gamma(shape 1/k, scale k)
};

struct LimitLawReport {
  std::int64_t k = 1;
  std::vector<double> s_grid;
  std::vector<double> t_grid;
  std::vector<LimitLawPoint> points;
  bool pgf_decreasing = false;          // P_a(s) strictly decreasing in a, every s
  bool exact_distance_shrinking = false;
};

/// N_a ~ H1(a, k, 1/k) as a grows: P_a(s) -> 0 and N_a / a converges to the
/// gamma law with LT (1 + kt)^{-1/k} (mean 1, variance k). a_grid must be
/// increasing with every a > 1; n >= 10^4.
LimitLawReport limit_law_check(std::span<const double> a_grid, std::int64_t k, std::size_t n, RngStream& rng);

struct StoppedSumReport {
  std::size_t n = 0;  // 0: nothing was compared
  double ks_distance = 0.0;
  double mean = 0.0;
  double target_mean = 0.0;
  double variance = 0.0;
  double target_variance = 0.0;
};

/// Sums N ~ H1(a, k, 1/k) IID gamma(scale c, shape 1/k) variates n times and
/// compares against gamma(scale a c, shape 1/k), which is the exact law of the
/// random sum. n = 0 yields an empty report; otherwise n >= 10^4.
StoppedSumReport stopped_sum_demo(double a, double c, std::int64_t k, std::size_t n, RngStream& rng);

}  // namespace harris
