#include "harris/estimation.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "harris/error.hpp"

namespace harris {
namespace {

constexpr double kGridLo = 1e-6;
constexpr double kGridHi = 1e6;
constexpr double kExpandedLo = 1e-12;
constexpr double kExpandedHi = 1e12;
constexpr int kGridPointsPerDecade = 8;

std::int64_t rounded_k(double k_hat) { return std::max<std::int64_t>(1, std::llround(k_hat)); }

void require_fittable(const Sample& sample) {
  if (sample.size() < 2 || sample.histogram().size() < 2) {
    throw Error(Errc::degenerate_sample, "need at least two distinct values");
  }
  if (!(sample.mean() > 1.0)) {
    throw Error(Errc::mean_at_boundary, "sample mean " + std::to_string(sample.mean()) + " is not above 1");
  }
}

struct SignChange {
  double lo;
  double hi;
};

std::vector<SignChange> scan_sign_changes(const Sample& sample, double lo, double hi) {
  const int decades = static_cast<int>(std::lround(std::log10(hi / lo)));
  const int points = decades * kGridPointsPerDecade;
  std::vector<SignChange> changes;
  double prev_k = lo;
  double prev_score = mle_score(sample, lo);
  for (int i = 1; i <= points; ++i) {
    const double K = lo * std::pow(10.0, static_cast<double>(i) / kGridPointsPerDecade);
    const double score = mle_score(sample, K);
    if ((prev_score > 0.0) != (score > 0.0)) changes.push_back({prev_k, K});
    prev_k = K;
    prev_score = score;
  }
  return changes;
}

}  // namespace

Sample::Sample(std::vector<std::int64_t> values, int origin) : values_(std::move(values)), origin_(origin) {
  if (origin_ != 0 && origin_ != 1) throw Error(Errc::domain_error, "origin must be 0 or 1");
  if (values_.empty()) throw Error(Errc::domain_error, "sample is empty");
  std::int64_t g = 0;
  for (const auto v : values_) {
    if (v < origin_) {
      throw Error(Errc::domain_error, "value " + std::to_string(v) + " lies below the origin");
    }
    g = std::gcd(g, v - origin_);
    ++histogram_[v + 1 - origin_];
  }
  if (g > 0) inferred_k_ = g;

  const double n = static_cast<double>(values_.size());
  long double total = 0.0L;
  for (const auto& [x, count] : histogram_) total += static_cast<long double>(x) * count;
  mean_ = static_cast<double>(total / n);
  long double ss = 0.0L;
  for (const auto& [x, count] : histogram_) {
    const long double d = static_cast<long double>(x) - mean_;
    ss += d * d * count;
  }
  variance_ = values_.size() > 1 ? static_cast<double>(ss / (n - 1.0)) : 0.0;
}

FitResult fit_moments(const Sample& sample) {
  if (sample.size() < 2 || sample.histogram().size() < 2) {
    throw Error(Errc::degenerate_sample, "zero sample variance");
  }
  const double xbar = sample.mean();
  if (!(xbar > 1.0)) {
    throw Error(Errc::mean_at_boundary, "sample mean " + std::to_string(xbar) + " is not above 1");
  }
  FitResult fit;
  fit.method = FitMethod::moments;
  fit.m_hat = xbar;
  fit.k_hat = sample.variance() / (xbar * (xbar - 1.0));
  fit.k_hat_int = rounded_k(fit.k_hat);
  return fit;
}

double mle_score(const Sample& sample, double K) {
  if (!std::isfinite(K) || !(K > 0.0)) throw Error(Errc::domain_error, "K must be finite and > 0");
  const double n = static_cast<double>(sample.size());
  const double psi_K = numerics::digamma(K);
  double sum = 0.0;
  for (const auto& [x, count] : sample.histogram()) {
    if (x == 1) continue;
    sum += static_cast<double>(count) * (numerics::digamma(K * static_cast<double>(x)) - psi_K);
  }
  return sum - n * std::log(sample.mean());
}

FitResult fit_mle(const Sample& sample, const numerics::Tolerance& tol) {
  tol.validate();
  require_fittable(sample);

  double lo = kGridLo;
  double hi = kGridHi;
  auto changes = scan_sign_changes(sample, lo, hi);
  while (changes.empty() && (lo > kExpandedLo || hi < kExpandedHi)) {
    lo = std::max(lo / 1e3, kExpandedLo);
    hi = std::min(hi * 1e3, kExpandedHi);
    changes = scan_sign_changes(sample, lo, hi);
  }
  if (changes.empty()) {
    std::ostringstream msg;
    msg << "score does not change sign on [" << lo << ", " << hi << "]: score(lo) = " << mle_score(sample, lo)
        << ", score(hi) = " << mle_score(sample, hi);
    throw Error(Errc::no_root_in_bracket, msg.str());
  }
  if (changes.size() > 1) {
    std::ostringstream msg;
    msg << changes.size() << " sign changes of the score, first near K = " << changes[0].lo << " and K = "
        << changes[1].lo;
    throw Error(Errc::multiple_roots, msg.str());
  }

  double a = changes[0].lo;
  double b = changes[0].hi;
  double score_a = mle_score(sample, a);
  double mid = 0.5 * (a + b);
  double score_mid = mle_score(sample, mid);
  int iterations = 0;
  while (iterations < tol.max_iter) {
    ++iterations;
    mid = 0.5 * (a + b);
    score_mid = mle_score(sample, mid);
    if (std::abs(score_mid) < tol.abs_tol || (b - a) < tol.rel_tol * mid) break;
    if ((score_mid > 0.0) == (score_a > 0.0)) {
      a = mid;
      score_a = score_mid;
    } else {
      b = mid;
    }
  }

  FitResult fit;
  fit.method = FitMethod::mle;
  fit.m_hat = sample.mean();
  fit.k_hat = 1.0 / mid;
  fit.k_hat_int = rounded_k(fit.k_hat);
  fit.solver = SolverDiagnostics{iterations, a, b, std::abs(score_mid)};
  return fit;
}

std::int64_t infer_lattice(std::span<const std::int64_t> values, int origin) {
  std::int64_t g = 0;
  for (const auto v : values) {
    if (v < origin) throw Error(Errc::domain_error, "value below the origin");
    g = std::gcd(g, v - origin);
  }
  if (g == 0) throw Error(Errc::all_at_origin, "no value exceeds the origin");
  return g;
}

}  // namespace harris
