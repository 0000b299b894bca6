#include "harris/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harris/error.hpp"

namespace harris {
namespace {

void require_positive_constant(const PowerSeries& ps) {
  if (!(ps[0] > 0.0)) throw Error(Errc::zero_constant_term, "constant term must be > 0");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::domain_error, "a power series needs at least one coefficient");
  for (const double c : coeffs_) {
    if (!std::isfinite(c)) throw Error(Errc::domain_error, "non-finite series coefficient");
  }
}

PowerSeries PowerSeries::unit(std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = 1.0;
  return PowerSeries(std::move(c));
}

double PowerSeries::min_coefficient() const noexcept { return *std::min_element(coeffs_.begin(), coeffs_.end()); }

double PowerSeries::sum() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0); }

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = a.order();
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= std::min(i, b.order()); ++j) out[i] += b[j] * a[i - j];
  }
  return PowerSeries(std::move(out));
}

PowerSeries series_log(const PowerSeries& ps) {
  require_positive_constant(ps);
  const std::size_t order = ps.order();
  std::vector<double> l(order + 1, 0.0);
  l[0] = std::log(ps[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = ps[n];
    for (std::size_t j = 1; j < n; ++j) {
      acc -= static_cast<double>(j) / static_cast<double>(n) * l[j] * ps[n - j];
    }
    l[n] = acc / ps[0];
  }
  return PowerSeries(std::move(l));
}

PowerSeries series_exp(const PowerSeries& ps) {
  const std::size_t order = ps.order();
  std::vector<double> e(order + 1, 0.0);
  e[0] = std::exp(ps[0]);
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += static_cast<double>(j) * ps[j] * e[n - j];
    e[n] = acc / static_cast<double>(n);
  }
  return PowerSeries(std::move(e));
}

PowerSeries series_pow(const PowerSeries& ps, double alpha) {
  if (!std::isfinite(alpha)) throw Error(Errc::domain_error, "exponent must be finite");
  require_positive_constant(ps);
  const std::size_t order = ps.order();
  if (alpha == 0.0) return PowerSeries::unit(order);
  std::vector<double> b(order + 1, 0.0);
  b[0] = std::pow(ps[0], alpha);
  for (std::size_t n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      acc += ((alpha + 1.0) * static_cast<double>(j) - static_cast<double>(n)) * ps[j] * b[n - j];
    }
    b[n] = acc / (static_cast<double>(n) * ps[0]);
  }
  return PowerSeries(std::move(b));
}

PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den) {
  if (den.order() < num.order()) throw Error(Errc::domain_error, "divisor is truncated below the dividend order");
  const PowerSeries log_den = series_log(den);
  std::vector<double> neg(log_den.coeffs());
  for (double& c : neg) c = -c;
  return series_multiply(num, series_exp(PowerSeries(std::move(neg))));
}

}  // namespace harris
