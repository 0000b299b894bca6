#include "harris/moments.hpp"

#include <cmath>
#include <limits>

#include "harris/error.hpp"

namespace harris {
namespace {

// H1 closed forms as functions of (m, k).
MomentSet h1_moments(double m, double k) {
  MomentSet s;
  const double mm1 = m * (m - 1.0);
  const double m2 = m * m;
  const double k2 = k * k;

  s.factorial[0] = m;
  s.factorial[1] = mm1 * (k + 1.0);
  s.factorial[2] = mm1 * (k + 1.0) * (k - m + 2.0 * (k + 1.0) * (m - 1.0));
  s.factorial[3] = mm1 * (k + 1.0) *
                   (6.0 * m2 * k2 + 5.0 * m2 * k + m2 - 6.0 * m * k2 - 13.0 * m * k - 5.0 * m + k2 + 5.0 * k + 6.0);

  s.raw[0] = m;
  s.raw[1] = m2 + mm1 * k;
  s.raw[2] = m2 * m + mm1 * k * (2.0 * m * k + 3.0 * m - k);
  s.raw[3] = m2 * m2 + mm1 * k * (6.0 * m2 * k2 + 11.0 * m2 * k + 6.0 * m2 - 6.0 * m * k2 - 7.0 * m * k + k2);

  s.central[0] = 0.0;
  s.central[1] = mm1 * k;
  s.central[2] = mm1 * (2.0 * m - 1.0) * k2;
  s.central[3] = mm1 * (k * (6.0 * m2 - 6.0 * m + 1.0) + 3.0 * mm1) * k2;

  s.cumulants[0] = m;
  s.cumulants[1] = mm1 * k;
  s.cumulants[2] = mm1 * (2.0 * m - 1.0) * k2;
  s.cumulants[3] = mm1 * (6.0 * m2 - 6.0 * m + 1.0) * k2 * k;

  s.beta1 = (2.0 * m - 1.0) * (2.0 * m - 1.0) * k / mm1;
  s.gamma1 = (2.0 * m - 1.0) * std::sqrt(k / mm1);
  s.gamma2 = 6.0 * k + k / mm1;
  s.beta2 = 3.0 + s.gamma2;
  s.cv = std::sqrt((1.0 - 1.0 / m) * k);
  return s;
}

// Raw moments of X - 1 from those of X, and factorial moments from raw ones.
void shift_to_origin_zero(MomentSet& s) {
  const auto& r = s.raw;
  const double m1 = r[0] - 1.0;
  const double m2 = r[1] - 2.0 * r[0] + 1.0;
  const double m3 = r[2] - 3.0 * r[1] + 3.0 * r[0] - 1.0;
  const double m4 = r[3] - 4.0 * r[2] + 6.0 * r[1] - 4.0 * r[0] + 1.0;
  s.raw = {m1, m2, m3, m4};
  s.factorial = {m1, m2 - m1, m3 - 3.0 * m2 + 2.0 * m1, m4 - 6.0 * m3 + 11.0 * m2 - 6.0 * m1};
  s.cumulants[0] = m1;
  s.cv = std::sqrt(s.central[1]) / m1;
}

double closed_form(double m, double k, int order, RecurrenceKind kind) {
  // Order 0 terms appear on the right-hand side of the central recurrence.
  if (order == 0) return kind == RecurrenceKind::central ? 1.0 : 0.0;
  const MomentSet s = h1_moments(m, k);
  switch (kind) {
    case RecurrenceKind::raw: return s.raw[order - 1];
    case RecurrenceKind::central: return s.central[order - 1];
    case RecurrenceKind::cumulant: return s.cumulants[order - 1];
  }
  return 0.0;
}

}  // namespace

MomentSet moments(const HarrisParams& params) {
  MomentSet s = h1_moments(params.m(), static_cast<double>(params.k()));
  if (params.variant() == Variant::H0) shift_to_origin_zero(s);
  return s;
}

double brute_force_moment(const HarrisParams& params, int order, MomentKind kind) {
  if (order < 1 || order > 4) throw Error(Errc::domain_error, "moment order must be in 1..4");

  const double shape = params.shape();
  const double q = params.q();
  const double k = static_cast<double>(params.k());
  const double origin = static_cast<double>(params.origin());

  double center = 0.0;
  if (kind == MomentKind::central) center = brute_force_moment(params, 1, MomentKind::raw);

  const auto weight = [&](double x) {
    switch (kind) {
      case MomentKind::raw: return std::pow(x, order);
      case MomentKind::central: return std::pow(x - center, order);
      case MomentKind::factorial: {
        double w = 1.0;
        for (int j = 0; j < order; ++j) w *= x - j;
        return w;
      }
    }
    return 0.0;
  };

  double sum = 0.0;
  double compensation = 0.0;
  double prob = std::exp(-std::log(params.m()) * shape);
  for (std::int64_t r = 0;; ++r) {
    const double rr = static_cast<double>(r);
    const double x = origin + rr * k;
    const double term = prob * weight(x);

    // Kahan summation keeps the oracle's own rounding well below its
    // 1e-12 truncation target on long tails.
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;

    // Beyond index r the mass ratio is at most q and |weight| grows by at
    // most ((|x| + k + |center|) / (|x| + |center|))^order per step, so the
    // tail is bounded by a geometric series once that product is below 1.
    const double base = std::abs(x) + std::abs(center) + 1.0;
    const double growth = q * std::pow((base + k) / base, order);
    if (growth < 1.0 && r > 0) {
      const double envelope = prob * std::pow(base, order) * growth / (1.0 - growth);
      if (envelope < 1e-12 * std::abs(sum) || envelope < std::numeric_limits<double>::min()) break;
    }
    prob *= (shape + rr) / (rr + 1.0) * q;
    if (prob == 0.0) break;
  }
  return sum;
}

RecurrenceResidual recurrence_check(const HarrisParams& params, int r, RecurrenceKind kind, std::optional<double> h) {
  if (r < 1 || r > 3) throw Error(Errc::domain_error, "recurrence order must be in 1..3");
  const double m = params.m();
  const double k = static_cast<double>(params.k());
  const double step = h.value_or(1e-5 * m);
  if (!(step > 0.0)) throw Error(Errc::domain_error, "step must be > 0");
  if (m - step <= 1.0) {
    throw Error(Errc::step_too_large, "m - h = " + std::to_string(m - step) + " leaves the parameter space");
  }

  const double derivative =
      (closed_form(m + step, k, r, kind) - closed_form(m - step, k, r, kind)) / (2.0 * step);
  const double current = closed_form(m, k, r, kind);
  const double lhs = closed_form(m, k, r + 1, kind);

  double rhs = 0.0;
  switch (kind) {
    case RecurrenceKind::raw: rhs = m * ((m - 1.0) * k * derivative + current); break;
    case RecurrenceKind::central:
      rhs = m * (m - 1.0) * k * (derivative + static_cast<double>(r) * closed_form(m, k, r - 1, kind));
      break;
    case RecurrenceKind::cumulant: rhs = m * (m - 1.0) * k * derivative; break;
  }
  return RecurrenceResidual{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace harris
