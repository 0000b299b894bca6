#pragma once

#include <array>
#include <optional>

#include "harris/distribution.hpp"

namespace harris {

/// First four moments of each kind. Index i holds order i+1, so central[0]
/// is the (zero) first central moment.
struct MomentSet {
  std::array<double, 4> factorial{};
  std::array<double, 4> raw{};
  std::array<double, 4> central{};
  std::array<double, 4> cumulants{};
  double beta1 = 0.0;
  double gamma1 = 0.0;
  double beta2 = 0.0;
  double gamma2 = 0.0;
  double cv = 0.0;
};

/// Closed forms. H0 values are obtained from H1 by the unit origin shift:
/// raw and factorial moments are re-expanded, central moments and
/// cumulants of order >= 2 are unchanged.
MomentSet moments(const HarrisParams& params);

enum class MomentKind { raw, central, factorial };

/// Series-summation oracle over the pmf table, independent of the closed
/// forms. Terms are summed until the geometric tail envelope falls below
/// 1e-12 of the running total. order in 1..4.
double brute_force_moment(const HarrisParams& params, int order, MomentKind kind);

enum class RecurrenceKind { raw, central, cumulant };

struct RecurrenceResidual {
  double lhs;       // closed-form moment of order r+1
  double rhs;       // right-hand side with d/dm by central difference
  double residual;  // |lhs - rhs|
};

/// Checks one of the d/dm moment recurrences of H1 at order r in 1..3:
///   raw:      mu'_{r+1} = m((m-1)k dmu'_r/dm + mu'_r)
///   central:  mu_{r+1}  = m(m-1)k(dmu_r/dm + r mu_{r-1})
///   cumulant: k_{r+1}   = m(m-1)k dk_r/dm
/// The recurrences are statements about H1; the variant is ignored.
/// Errc::step_too_large when m - h <= 1 (default h = 1e-5 m).
RecurrenceResidual recurrence_check(const HarrisParams& params, int r, RecurrenceKind kind,
                                    std::optional<double> h = std::nullopt);

}  // namespace harris
