#include "harris/stability.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "harris/error.hpp"
#include "harris/gof.hpp"
#include "harris/sampling.hpp"

namespace harris {
namespace {

constexpr std::size_t kMinMonteCarlo = 10000;

std::string describe_min(double min_coefficient) {
  std::ostringstream out;
  out << "min coefficient " << min_coefficient;
  return out.str();
}

DivisibilityCheck judge(const PowerSeries& series) {
  DivisibilityCheck check;
  check.min_coefficient = series.min_coefficient();
  check.pass = check.min_coefficient >= kCoefficientFloor;
  check.witness = describe_min(check.min_coefficient);
  return check;
}

// (1 - c + c s^step)^k as a polynomial truncated to the given order.
std::vector<double> thinned_power(double c, std::int64_t k, std::int64_t step, std::size_t order) {
  std::vector<double> poly(order + 1, 0.0);
  for (std::int64_t j = 0; j <= k; ++j) {
    const auto pos = static_cast<std::size_t>(j * step);
    if (pos > order) break;
    poly[pos] = boost::math::binomial_coefficient<double>(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
                std::pow(1.0 - c, static_cast<double>(k - j)) * std::pow(c, static_cast<double>(j));
  }
  return poly;
}

double limit_cdf(double w, std::int64_t k) {
  if (w <= 0.0) return 0.0;
  const double kk = static_cast<double>(k);
  return boost::math::gamma_p(1.0 / kk, w / kk);
}

}  // namespace

PowerSeries pgf_series(const HarrisParams& params, std::size_t order) {
  std::vector<double> coeffs(order + 1, 0.0);
  const auto top = static_cast<std::int64_t>(order);
  if (top >= params.origin()) {
    const std::int64_t r_max = (top - params.origin()) / params.k();
    for (const auto& entry : pmf_table(params, r_max)) {
      coeffs[static_cast<std::size_t>(entry.point.x)] = entry.probability;
    }
  }
  return PowerSeries(std::move(coeffs));
}

DivisibilityCheck id_check(const PowerSeries& pgf, int n) {
  if (n < 2) throw Error(Errc::domain_error, "root order must be >= 2");
  return judge(series_pow(pgf, 1.0 / static_cast<double>(n)));
}

DivisibilityCheck id_check(const HarrisParams& params, int n, std::size_t order) {
  return id_check(pgf_series(params.with_variant(Variant::H0), order), n);
}

DivisibilityCheck sd_check(const HarrisParams& params, double c, std::size_t order, Thinning thinning) {
  if (!(c > 0.0 && c < 1.0)) throw Error(Errc::domain_error, "thinning constant must lie in (0, 1)");
  if (params.variant() == Variant::H1) {
    return DivisibilityCheck{false, 0.0, "P(X=0)=0"};
  }
  const double m = params.m();
  const std::int64_t k = params.k();
  const std::int64_t step = thinning == Thinning::lattice ? k : 1;
  const std::int64_t power = thinning == Thinning::lattice ? 1 : k;

  // Divisor P(thinned s) = D(s)^{-1/k} with D = m - (m-1) * poly.
  std::vector<double> d = thinned_power(c, power, step, order);
  for (double& coeff : d) coeff = -(m - 1.0) * coeff;
  d[0] += m;
  const PowerSeries divisor = series_pow(PowerSeries(std::move(d)), -params.shape());
  return judge(series_divide(pgf_series(params, order), divisor));
}

double gamma_harris_identity(double a, double c, std::int64_t k, std::span<const double> t_grid) {
  if (!(a > 1.0)) throw Error(Errc::domain_error, "a must be > 1");
  if (!(c > 0.0)) throw Error(Errc::domain_error, "c must be > 0");
  const HarrisParams counting = make_params(a, static_cast<double>(k), Variant::H1);
  const double shape = counting.shape();
  double worst = 0.0;
  for (const double t : t_grid) {
    if (!(t >= 0.0)) throw Error(Errc::domain_error, "t grid values must be >= 0");
    const double lhs = pgf(counting, std::pow(1.0 + c * t, -shape));
    const double rhs = std::pow(1.0 + a * c * t, -shape);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

LimitLawReport limit_law_check(std::span<const double> a_grid, std::int64_t k, std::size_t n, RngStream& rng) {
  if (n < kMinMonteCarlo) throw Error(Errc::domain_error, "limit law check needs n >= 10^4");
  if (a_grid.empty()) throw Error(Errc::domain_error, "empty a grid");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    if (!(a_grid[i] > 1.0) || (i > 0 && !(a_grid[i] > a_grid[i - 1]))) {
      throw Error(Errc::domain_error, "a grid must be increasing with values > 1");
    }
  }

  LimitLawReport report;
  report.k = k;
  report.s_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  report.t_grid = {0.25, 0.5, 1.0, 2.0, 4.0};
  const double kk = static_cast<double>(k);

  for (const double a : a_grid) {
    const HarrisParams params = make_params(a, kk, Variant::H1);
    LimitLawPoint point;
    point.a = a;
    for (const double s : report.s_grid) point.pgf_values.push_back(pgf(params, s));

    const auto draws = sample_gamma_poisson(params, rng, n);
    std::vector<double> scaled;
    scaled.reserve(n);
    for (const auto& d : draws) scaled.push_back(static_cast<double>(d.x) / a);

    for (const double t : report.t_grid) {
      const double limit = std::pow(1.0 + kk * t, -1.0 / kk);
      const double exact = pgf(params, std::exp(-t / a));
      double empirical = 0.0;
      for (const double w : scaled) empirical += std::exp(-t * w);
      empirical /= static_cast<double>(n);
      point.exact_lt_distance = std::max(point.exact_lt_distance, std::abs(exact - limit));
      point.empirical_lt_distance = std::max(point.empirical_lt_distance, std::abs(empirical - limit));
    }

    const auto summary = gof::summarize(std::span<const double>(scaled));
    point.mean = summary.mean;
    point.variance = summary.variance;
    point.ks_distance = gof::ks_distance(std::move(scaled), [k](double w) { return limit_cdf(w, k); });
    report.points.push_back(std::move(point));
  }

  report.pgf_decreasing = true;
  report.exact_distance_shrinking = true;
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    const auto& prev = report.points[i - 1];
    const auto& cur = report.points[i];
    for (std::size_t j = 0; j < report.s_grid.size(); ++j) {
      if (!(cur.pgf_values[j] < prev.pgf_values[j])) report.pgf_decreasing = false;
    }
    if (!(cur.exact_lt_distance < prev.exact_lt_distance)) report.exact_distance_shrinking = false;
  }
  return report;
}

StoppedSumReport stopped_sum_demo(double a, double c, std::int64_t k, std::size_t n, RngStream& rng) {
  StoppedSumReport report;
  if (n == 0) return report;
  if (n < kMinMonteCarlo) throw Error(Errc::domain_error, "stopped sum demo needs n >= 10^4");
  if (!(c > 0.0)) throw Error(Errc::domain_error, "c must be > 0");

  const HarrisParams counting = make_params(a, static_cast<double>(k), Variant::H1);
  const double shape = counting.shape();
  const auto counts = sample_nb(counting, rng, n);

  std::vector<double> sums;
  sums.reserve(n);
  for (const auto& count : counts) {
    double total = 0.0;
    for (std::int64_t i = 0; i < count.x; ++i) total += variates::gamma(rng, shape, c);
    sums.push_back(total);
  }

  const double target_scale = a * c;
  const auto summary = gof::summarize(std::span<const double>(sums));
  report.n = n;
  report.mean = summary.mean;
  report.variance = summary.variance;
  report.target_mean = shape * target_scale;
  report.target_variance = shape * target_scale * target_scale;
  report.ks_distance = gof::ks_distance(std::move(sums), [&](double x) {
    return x <= 0.0 ? 0.0 : boost::math::gamma_p(shape, x / target_scale);
  });
  return report;
}

}  // namespace harris
