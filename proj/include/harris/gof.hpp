#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "harris/distribution.hpp"

namespace harris::gof {

struct ChiSquareResult {
  double statistic;
  int dof;
  double p_value;
};

/// Pearson goodness of fit of observed values against the Harris pmf.
/// Consecutive lattice cells are pooled until each expects at least
/// min_expected counts; the tail beyond the last cell is folded into it.
/// Off-lattice values give p_value = 0.
ChiSquareResult chi_square_gof(const HarrisParams& params, std::span<const std::int64_t> values,
                               double min_expected = 5.0);

/// Two-sample chi-square homogeneity test over the pooled value range, with
/// cells merged until each holds at least min_count combined observations.
ChiSquareResult chi_square_two_sample(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                      double min_count = 10.0);

/// sup_x |F_n(x) - F(x)| for a continuous reference F.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

struct Summary {
  double mean;
  double variance;  // denominator n - 1
};

Summary summarize(std::span<const double> values);
Summary summarize(std::span<const std::int64_t> values);

}  // namespace harris::gof
