#include "harris/distribution.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "harris/error.hpp"
#include "harris/numerics.hpp"

namespace harris {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double log_p0(const HarrisParams& params) { return -std::log(params.m()) * params.shape(); }

// Index of the last support point at or below x, or -1 below the origin.
std::int64_t floor_index(const HarrisParams& params, double x) {
  const double offset = x - static_cast<double>(params.origin());
  if (offset < 0.0) return -1;
  return static_cast<std::int64_t>(std::floor(offset / static_cast<double>(params.k())));
}

double survival_at_index(const HarrisParams& params, std::int64_t r) {
  return numerics::reg_inc_beta_complement(params.p(), params.shape(), static_cast<double>(r + 1));
}

}  // namespace

HarrisParams make_params(double m, double k, Variant variant) {
  if (!std::isfinite(m) || !(m > 1.0)) {
    throw Error(Errc::invalid_parameter, "m must be finite and > 1, got " + std::to_string(m));
  }
  if (!std::isfinite(k) || k < 1.0 || std::floor(k) != k || k > 1e9) {
    throw Error(Errc::invalid_parameter, "k must be a positive integer, got " + std::to_string(k));
  }
  return HarrisParams(m, static_cast<std::int64_t>(k), variant);
}

HarrisParams HarrisParams::with_m(double m) const { return make_params(m, static_cast<double>(k_), variant_); }

SupportPoint support_point(const HarrisParams& params, std::int64_t r) {
  if (r < 0) throw Error(Errc::domain_error, "lattice index must be >= 0");
  return SupportPoint{params.origin() + r * params.k(), r};
}

std::optional<std::int64_t> lattice_index(const HarrisParams& params, std::int64_t x) {
  const std::int64_t offset = x - params.origin();
  if (offset < 0 || offset % params.k() != 0) return std::nullopt;
  return offset / params.k();
}

double log_pmf(const HarrisParams& params, std::int64_t r) {
  if (r < 0) throw Error(Errc::domain_error, "lattice index must be >= 0");
  const double log_q = std::log1p(-params.p());
  return numerics::log_gen_binom(params.shape(), r) + log_p0(params) + static_cast<double>(r) * log_q;
}

double pmf(const HarrisParams& params, std::int64_t r) { return std::exp(log_pmf(params, r)); }

std::vector<TableEntry> pmf_table(const HarrisParams& params, std::int64_t r_max) {
  if (r_max < 0) throw Error(Errc::domain_error, "r_max must be >= 0");
  std::vector<TableEntry> table;
  table.reserve(static_cast<std::size_t>(r_max) + 1);
  const double shape = params.shape();
  const double q = params.q();
  double prob = std::exp(log_p0(params));
  for (std::int64_t r = 0; r <= r_max; ++r) {
    table.push_back({support_point(params, r), prob});
    const double rr = static_cast<double>(r);
    prob *= (shape + rr) / (rr + 1.0) * q;
  }
  return table;
}

double cdf_at_index(const HarrisParams& params, std::int64_t r) {
  if (r < 0) return 0.0;
  return numerics::reg_inc_beta(params.p(), params.shape(), static_cast<double>(r + 1));
}

double cdf(const HarrisParams& params, double x) {
  if (std::isnan(x)) throw Error(Errc::domain_error, "cdf argument is NaN");
  if (x == std::numeric_limits<double>::infinity()) return 1.0;
  return cdf_at_index(params, floor_index(params, x));
}

double survival(const HarrisParams& params, double x) {
  if (std::isnan(x)) throw Error(Errc::domain_error, "survival argument is NaN");
  if (x == std::numeric_limits<double>::infinity()) return 0.0;
  const std::int64_t r = floor_index(params, x);
  if (r < 0) return 1.0;
  return survival_at_index(params, r);
}

namespace {

// Moves a candidate index to the smallest r with cdf_at_index(r) >= u, so
// that quantile agrees exactly with the incomplete-beta DF.
std::int64_t settle(const HarrisParams& params, double u, std::int64_t r) {
  while (r > 0 && cdf_at_index(params, r - 1) >= u) --r;
  while (cdf_at_index(params, r) < u) ++r;
  return r;
}

}  // namespace

SupportPoint quantile(const HarrisParams& params, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error(Errc::domain_error, "quantile level must lie in (0, 1), got " + std::to_string(u));
  }
  const double shape = params.shape();
  const double q = params.q();
  double prob = std::exp(log_p0(params));
  double cumulative = prob;
  std::int64_t r = 0;
  for (;; ++r) {
    if (cumulative >= u) return support_point(params, settle(params, u, r));
    const double rr = static_cast<double>(r);
    prob *= (shape + rr) / (rr + 1.0) * q;
    if (prob < cumulative * kEps) break;
    cumulative += prob;
  }

  // The running sum has stalled below u: locate the index on the tail
  // through the survival function instead.
  const double target = 1.0 - u;
  std::int64_t lo = r;
  std::int64_t hi = std::max<std::int64_t>(2 * r, r + 1);
  while (survival_at_index(params, hi) > target) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (survival_at_index(params, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return support_point(params, settle(params, u, hi));
}

double pgf(const HarrisParams& params, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(Errc::domain_error, "pgf argument must lie in [0, 1], got " + std::to_string(s));
  }
  const double m = params.m();
  const double core = std::pow(m - (m - 1.0) * std::pow(s, static_cast<double>(params.k())), -params.shape());
  return params.variant() == Variant::H1 ? s * core : core;
}

double mgf_boundary(const HarrisParams& params) {
  return std::log(params.m() / (params.m() - 1.0)) / static_cast<double>(params.k());
}

double cgf(const HarrisParams& params, double t) {
  if (std::isnan(t)) throw Error(Errc::domain_error, "cgf argument is NaN");
  if (!(t < mgf_boundary(params))) {
    throw Error(Errc::divergence, "t = " + std::to_string(t) + " is at or beyond the convergence boundary " +
                                      std::to_string(mgf_boundary(params)));
  }
  const double k = static_cast<double>(params.k());
  const double qe = params.q() * std::exp(t * k);
  return static_cast<double>(params.origin()) * t - std::log(params.m()) / k - std::log1p(-qe) / k;
}

double mgf(const HarrisParams& params, double t) { return std::exp(cgf(params, t)); }

NbParams nb_transform(const HarrisParams& params) { return NbParams{params.p(), params.shape()}; }

HarrisParams nb_inverse(const NbParams& nb, std::int64_t k, Variant variant) {
  if (!(nb.p > 0.0 && nb.p < 1.0)) {
    throw Error(Errc::invalid_parameter, "NB success probability must lie in (0, 1)");
  }
  if (k < 1 || std::abs(nb.shape * static_cast<double>(k) - 1.0) > 8.0 * kEps) {
    throw Error(Errc::invalid_parameter, "NB shape must equal 1/k for a Harris law");
  }
  return make_params(1.0 / nb.p, static_cast<double>(k), variant);
}

std::vector<double> conditional_pmf(const HarrisParams& params, std::int64_t t) {
  if (t < 0) throw Error(Errc::domain_error, "t must be >= 0");
  const double shape = params.shape();
  const double log_norm = numerics::log_gen_binom(2.0 * shape, t);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  for (std::int64_t r = 0; r <= t; ++r) {
    out.push_back(
        std::exp(numerics::log_gen_binom(shape, r) + numerics::log_gen_binom(shape, t - r) - log_norm));
  }
  return out;
}

double characterization_residual(const HarrisParams& params, std::int64_t n, std::optional<double> h) {
  if (params.variant() != Variant::H1) {
    throw Error(Errc::invalid_parameter, "the characterization is stated for H1 only");
  }
  if (n < 0) throw Error(Errc::domain_error, "n must be >= 0");
  const double m = params.m();
  const double step = h.value_or(1e-5 * m);
  if (!(step > 0.0)) throw Error(Errc::domain_error, "step must be > 0");
  if (m - step <= 1.0) {
    throw Error(Errc::step_too_large, "m - h = " + std::to_string(m - step) + " leaves the parameter space");
  }
  const auto tail = [&](double mu) { return survival_at_index(params.with_m(mu), n); };
  const double derivative = (tail(m + step) - tail(m - step)) / (2.0 * step);
  const double nk1 = static_cast<double>(n * params.k() + 1);
  const double rhs = nk1 / (m * static_cast<double>(params.k())) * pmf(params, n);
  return std::abs(derivative - rhs);
}

}  // namespace harris
