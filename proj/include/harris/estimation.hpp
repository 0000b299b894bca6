#pragma once

// Moment and maximum-likelihood estimators for (m, k).
//
// Estimators work on the H1 scale: a sample with origin 0 is shifted by +1
// before fitting, so m_hat always estimates the H1 mean m.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "harris/numerics.hpp"

namespace harris {

class Sample {
 public:
  /// Errc::domain_error if the sample is empty, origin is not 0 or 1, or a
  /// value lies below the origin.
  explicit Sample(std::vector<std::int64_t> values, int origin = 1);

  std::span<const std::int64_t> values() const noexcept { return values_; }
  int origin() const noexcept { return origin_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// gcd of (value - origin) over values above the origin; nullopt when every
  /// value sits at the origin.
  std::optional<std::int64_t> inferred_k() const noexcept { return inferred_k_; }

  /// Counts of H1-scale values (value + 1 - origin), in ascending order.
  /// Every statistic is computed from this, which makes fits independent of
  /// the order of the input.
  const std::map<std::int64_t, std::int64_t>& histogram() const noexcept { return histogram_; }

  /// H1-scale sample mean and (n-1)-denominator variance.
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }

 private:
  std::vector<std::int64_t> values_;
  int origin_;
  std::optional<std::int64_t> inferred_k_;
  std::map<std::int64_t, std::int64_t> histogram_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

enum class FitMethod { moments, mle };

struct SolverDiagnostics {
  int iterations = 0;
  double bracket_lo = 0.0;  // final bracket on K = 1/k
  double bracket_hi = 0.0;
  double residual = 0.0;    // |score(K_hat)|
};

struct FitResult {
  double m_hat = 0.0;
  double k_hat = 0.0;
  std::int64_t k_hat_int = 1;  // max(1, round(k_hat))
  FitMethod method = FitMethod::moments;
  std::optional<SolverDiagnostics> solver;  // mle only
};

/// m_hat = xbar, k_hat = s^2 / (xbar (xbar - 1)).
/// Errc::degenerate_sample for fewer than two values or zero variance,
/// Errc::mean_at_boundary for xbar <= 1.
FitResult fit_moments(const Sample& sample);

/// Likelihood equation in K = 1/k after substituting p_hat = 1/xbar:
///   sum_i [psi(K x_i) - psi(K)] - n ln(xbar).
/// psi(K x_i) - psi(K) equals the harmonic sum 1/K + ... + 1/(K + r_i - 1)
/// whenever r_i = K (x_i - 1) is an integer, and extends it continuously
/// otherwise. Strictly decreasing in K for a non-constant sample.
/// Errc::domain_error for K <= 0.
double mle_score(const Sample& sample, double K);

/// m_hat = xbar in closed form; k_hat = 1/K_hat with K_hat the root of
/// mle_score, bracketed on a log grid over [1e-6, 1e6] (expanded up to
/// [1e-12, 1e12]) and refined by bisection.
/// Errors: degenerate_sample, mean_at_boundary, no_root_in_bracket,
/// multiple_roots.
FitResult fit_mle(const Sample& sample, const numerics::Tolerance& tol = {});

/// gcd of (value - origin) over values strictly above the origin.
/// Errc::all_at_origin if there are none.
std::int64_t infer_lattice(std::span<const std::int64_t> values, int origin);

}  // namespace harris
