#include <doctest.h>

#include <cmath>

#include "harris/moments.hpp"
#include "oracles.hpp"

using namespace harris;

namespace {

const double kMs[] = {1.25, 2.0, 10.0, 50.0};
const double kKs[] = {1.0, 2.0, 5.0};

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("closed forms at m = 2, k = 2") {
    const MomentSet s = moments(make_params(2, 2));
    CHECK(s.raw[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.central[1] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(s.central[0] == 0.0);
    CHECK(s.gamma1 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s.beta1 == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(s.beta2 == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(s.gamma2 == doctest::Approx(13.0).epsilon(1e-14));
    CHECK(s.cv == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("k = 1 factorial moments are geometric") {
    for (const double m : kMs) {
      const MomentSet s = moments(make_params(m, 1));
      const double q = m - 1.0;
      CHECK(close_rel(s.factorial[2], 6 * m * q * q, 1e-14));
      CHECK(close_rel(s.factorial[3], 24 * m * q * q * q, 1e-14));
      double fact = 1.0;
      for (int r = 1; r <= 4; ++r) {
        fact *= r;
        CHECK(close_rel(s.factorial[r - 1], fact * m * std::pow(q, r - 1), 1e-14));
      }
    }
  }

  TEST_CASE("brute force spot values") {
    CHECK(std::abs(brute_force_moment(make_params(2, 2), 1, MomentKind::raw) - 2.0) <= 1e-9);
    CHECK(close_rel(brute_force_moment(make_params(10, 5), 2, MomentKind::central), 450.0, 1e-6));
    CHECK(close_rel(brute_force_moment(make_params(4, 5), 3, MomentKind::central), 2100.0, 1e-6));
    CHECK_ERRC(brute_force_moment(make_params(2, 2), 0, MomentKind::raw), Errc::domain_error);
    CHECK_ERRC(brute_force_moment(make_params(2, 2), 5, MomentKind::raw), Errc::domain_error);
  }

  TEST_CASE("closed forms against series summation") {
    for (const double m : kMs) {
      for (const double k : kKs) {
        for (const Variant v : {Variant::H1, Variant::H0}) {
          const HarrisParams h = make_params(m, k, v);
          const MomentSet s = moments(h);
          INFO("m=" << m << " k=" << k << " variant=" << (v == Variant::H1 ? "h1" : "h0"));
          for (int order = 1; order <= 4; ++order) {
            CHECK(close_rel(s.raw[order - 1], brute_force_moment(h, order, MomentKind::raw), 1e-6));
            CHECK(close_rel(s.factorial[order - 1], brute_force_moment(h, order, MomentKind::factorial), 1e-6));
            if (order >= 2) {
              CHECK(close_rel(s.central[order - 1], brute_force_moment(h, order, MomentKind::central), 1e-6));
            }
          }
          const double mu2 = brute_force_moment(h, 2, MomentKind::central);
          const double mu3 = brute_force_moment(h, 3, MomentKind::central);
          const double mu4 = brute_force_moment(h, 4, MomentKind::central);
          const double mean = brute_force_moment(h, 1, MomentKind::raw);
          CHECK(close_rel(s.cumulants[0], mean, 1e-6));
          CHECK(close_rel(s.cumulants[1], mu2, 1e-6));
          CHECK(close_rel(s.cumulants[2], mu3, 1e-6));
          CHECK(close_rel(s.cumulants[3], mu4 - 3 * mu2 * mu2, 1e-6));
          CHECK(close_rel(s.beta1, mu3 * mu3 / (mu2 * mu2 * mu2), 1e-6));
          CHECK(close_rel(s.gamma1, mu3 / std::pow(mu2, 1.5), 1e-6));
          CHECK(close_rel(s.beta2, mu4 / (mu2 * mu2), 1e-6));
          CHECK(close_rel(s.gamma2, mu4 / (mu2 * mu2) - 3.0, 1e-6));
          CHECK(close_rel(s.cv, std::sqrt(mu2) / mean, 1e-6));
        }
      }
    }
  }

  TEST_CASE("consistency identities and shape") {
    for (const double m : kMs) {
      for (const double k : kKs) {
        const MomentSet s = moments(make_params(m, k));
        const auto& r = s.raw;
        const auto& c = s.central;
        CHECK(close_rel(c[1], r[1] - r[0] * r[0], 1e-9));
        CHECK(close_rel(c[2], r[2] - 3 * r[1] * r[0] + 2 * r[0] * r[0] * r[0], 1e-9));
        CHECK(close_rel(c[3], s.cumulants[3] + 3 * s.cumulants[1] * s.cumulants[1], 1e-9));
        CHECK(close_rel(s.beta1, c[2] * c[2] / (c[1] * c[1] * c[1]), 1e-9));
        CHECK(close_rel(s.beta2, c[3] / (c[1] * c[1]), 1e-9));
        CHECK(c[2] > 0.0);
        CHECK(close_rel(s.beta2 - 3.0, 6 * k + k / (m * (m - 1)), 1e-9));
        CHECK(s.gamma2 > 0.0);
      }
    }
  }

  TEST_CASE("H0 moments are the unit shift of H1") {
    for (const double m : kMs) {
      for (const double k : kKs) {
        const MomentSet a = moments(make_params(m, k));
        const MomentSet b = moments(make_params(m, k, Variant::H0));
        CHECK(close_rel(b.raw[0], m - 1.0, 1e-14));
        CHECK(close_rel(b.cumulants[0], m - 1.0, 1e-14));
        for (int i = 1; i < 4; ++i) {
          CHECK(b.central[i] == a.central[i]);
          CHECK(b.cumulants[i] == a.cumulants[i]);
        }
        CHECK(close_rel(b.raw[1], a.raw[1] - 2 * a.raw[0] + 1, 1e-12));
        CHECK(close_rel(b.cv, std::sqrt(a.central[1]) / (m - 1.0), 1e-12));
      }
    }
  }

  TEST_CASE("d/dm recurrences at spot values") {
    const auto c1 = recurrence_check(make_params(2, 2), 1, RecurrenceKind::cumulant);
    CHECK(c1.lhs == doctest::Approx(4.0));
    CHECK(c1.residual <= 1e-8);

    const auto raw = recurrence_check(make_params(10, 2), 2, RecurrenceKind::raw);
    CHECK(raw.residual <= 1e-4 * moments(make_params(10, 2)).raw[2]);

    const auto c3 = recurrence_check(make_params(50, 5), 3, RecurrenceKind::cumulant);
    CHECK(c3.residual <= 1e-4 * moments(make_params(50, 5)).cumulants[3]);
  }

  TEST_CASE("d/dm recurrences on the grid") {
    for (const double m : kMs) {
      for (const double k : kKs) {
        for (int r = 1; r <= 3; ++r) {
          for (const RecurrenceKind kind : {RecurrenceKind::raw, RecurrenceKind::central, RecurrenceKind::cumulant}) {
            const auto res = recurrence_check(make_params(m, k), r, kind);
            INFO("m=" << m << " k=" << k << " r=" << r);
            CHECK(res.residual <= 1e-4 * std::abs(res.lhs));
            CHECK(res.residual == doctest::Approx(std::abs(res.lhs - res.rhs)));
          }
        }
      }
    }
    CHECK_ERRC(recurrence_check(make_params(2, 2), 0, RecurrenceKind::raw), Errc::domain_error);
    CHECK_ERRC(recurrence_check(make_params(2, 2), 4, RecurrenceKind::raw), Errc::domain_error);
    CHECK_ERRC(recurrence_check(make_params(1.001, 2), 1, RecurrenceKind::raw, 0.01), Errc::step_too_large);
  }
}
