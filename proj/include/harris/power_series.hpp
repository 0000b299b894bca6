#pragma once

// Truncated formal power series sum_{j=0}^{R} c_j s^j. All operations
// truncate to the order of their (first) argument.

#include <cstddef>
#include <vector>

namespace harris {

class PowerSeries {
 public:
  /// Errc::domain_error on empty or non-finite coefficients.
  explicit PowerSeries(std::vector<double> coeffs);

  /// 1 + 0 s + ... + 0 s^order.
  static PowerSeries unit(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t j) const noexcept { return coeffs_[j]; }

  double min_coefficient() const noexcept;
  double sum() const noexcept;

 private:
  std::vector<double> coeffs_;
};

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b);

/// log of a series with positive constant term.
/// Errc::zero_constant_term if coeffs[0] <= 0.
PowerSeries series_log(const PowerSeries& ps);

PowerSeries series_exp(const PowerSeries& ps);

/// ps^alpha by the J.C.P. Miller recurrence. alpha = 0 gives the unit
/// series. Errc::zero_constant_term if coeffs[0] <= 0.
PowerSeries series_pow(const PowerSeries& ps, double alpha);

/// num / den computed as num * exp(-log(den)).
PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den);

}  // namespace harris
