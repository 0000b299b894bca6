#pragma once

// The Harris family H1(m, k, 1/k) on {1, 1+k, 1+2k, ...} and its shift
// H0(m, k, 1/k) on {0, k, 2k, ...}. Both share every formula; they differ only
// in the support origin and in the leading factor s of the PGF.
//
// Support points are addressed by the lattice index r: x = origin + r*k.
// The index r of either variant is NB(1/m, 1/k) distributed. A general origin
// shift theta (x = theta + r*k) changes nothing but SupportPoint::x and is not
// modelled as a separate variant.

#include <cstdint>
#include <optional>
#include <vector>

namespace harris {

enum class Variant { H1, H0 };

class HarrisParams {
 public:
  std::int64_t k() const noexcept { return k_; }
  double m() const noexcept { return m_; }
  Variant variant() const noexcept { return variant_; }
  std::int64_t origin() const noexcept { return variant_ == Variant::H1 ? 1 : 0; }

  /// Success probability 1/m of the underlying negative binomial.
  double p() const noexcept { return 1.0 / m_; }
  /// 1 - 1/m, computed as (m-1)/m to keep accuracy for m near 1.
  double q() const noexcept { return (m_ - 1.0) / m_; }
  /// NB shape 1/k.
  double shape() const noexcept { return 1.0 / static_cast<double>(k_); }

  /// Same (m, k) with another support origin.
  HarrisParams with_variant(Variant v) const noexcept { return HarrisParams(m_, k_, v); }
  /// Same (k, variant) with another m; validated.
  HarrisParams with_m(double m) const;

  friend bool operator==(const HarrisParams&, const HarrisParams&) = default;

 private:
  friend HarrisParams make_params(double m, double k, Variant variant);
  HarrisParams(double m, std::int64_t k, Variant variant) noexcept : m_(m), k_(k), variant_(variant) {}

  double m_;
  std::int64_t k_;
  Variant variant_;
};

/// Validating constructor: m > 1, k a positive integer. Errc::invalid_parameter
/// otherwise. k is taken as a real so that non-integer input is detectable.
HarrisParams make_params(double m, double k, Variant variant = Variant::H1);

struct SupportPoint {
  std::int64_t x;
  std::int64_t r;

  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

/// Errc::domain_error for r < 0.
SupportPoint support_point(const HarrisParams& params, std::int64_t r);

/// Lattice index of x, or nullopt if x is not a support point.
std::optional<std::int64_t> lattice_index(const HarrisParams& params, std::int64_t x);

struct TableEntry {
  SupportPoint point;
  double probability;
};

/// P(X = origin + r*k) = C(1/k + r - 1, r) p^(1/k) q^r, evaluated in log space.
double pmf(const HarrisParams& params, std::int64_t r);
double log_pmf(const HarrisParams& params, std::int64_t r);

/// r_max + 1 entries built by the ratio recurrence
///   P(r+1) = P(r) * (1/k + r)/(r + 1) * q
/// starting from P(0) = p^(1/k).
std::vector<TableEntry> pmf_table(const HarrisParams& params, std::int64_t r_max);

/// F(origin + r*k) = I_{1/m}(1/k, r + 1).
double cdf_at_index(const HarrisParams& params, std::int64_t r);

/// Right-continuous step DF for real x; floors to the last support point at or
/// below x and is 0 below the origin.
double cdf(const HarrisParams& params, double x);

/// P(X > x) = 1 - cdf(x), evaluated through the complementary incomplete beta.
double survival(const HarrisParams& params, double x);

/// Smallest support point with cdf >= u, u in (0, 1).
SupportPoint quantile(const HarrisParams& params, double u);

/// PGF on s in [0, 1].
double pgf(const HarrisParams& params, double s);

/// ln(m/(m-1))/k: mgf and cgf exist only for t strictly below this value.
double mgf_boundary(const HarrisParams& params);
double mgf(const HarrisParams& params, double t);
double cgf(const HarrisParams& params, double t);

struct NbParams {
  double p;      // success probability
  double shape;  // possibly non-integer size parameter

  friend bool operator==(const NbParams&, const NbParams&) = default;
};

/// The index r = (X - origin)/k is NB(1/m, 1/k).
NbParams nb_transform(const HarrisParams& params);

/// Inverse of nb_transform; nb.shape must equal 1/k.
HarrisParams nb_inverse(const NbParams& nb, std::int64_t k, Variant variant);

/// Law of the index r of X given X + Y = 2*origin + t*k, X and Y IID with
/// these params. Entries r = 0..t; independent of m; uniform when k = 1.
std::vector<double> conditional_pmf(const HarrisParams& params, std::int64_t t);

/// | dS/dmu - (nk+1)/(mu k) P(X = nk+1) | with S(mu) = P(X > nk+1) under
/// m = mu, the derivative taken by central difference with step h
/// (default 1e-5 * m). Only defined for H1. Errc::step_too_large when m - h <= 1.
double characterization_residual(const HarrisParams& params, std::int64_t n, std::optional<double> h = std::nullopt);

}  // namespace harris
