#pragma once

// Special-function kernels shared by the rest of the library. All functions
// are pure and validate their arguments, throwing harris::Error with
// Errc::domain_error on violation.

#include <cstdint>

namespace harris::numerics {

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;

  /// Throws Errc::invalid_parameter unless every field is positive.
  void validate() const;
};

/// ln Gamma(x) for finite x > 0.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for finite x > 0.
double digamma(double x);

/// Regularized incomplete beta I_p(a, b) = B_p(a, b) / B(a, b).
double reg_inc_beta(double p, double a, double b);

/// 1 - I_p(a, b), evaluated without cancellation.
double reg_inc_beta_complement(double p, double a, double b);

/// ln C(alpha + r - 1, r) = ln[ prod_{j<r} (alpha + j) / r! ].
double log_gen_binom(double alpha, std::int64_t r);

/// C(alpha + r - 1, r). Direct product for r <= 30, log space above.
double gen_binom(double alpha, std::int64_t r);

}  // namespace harris::numerics
