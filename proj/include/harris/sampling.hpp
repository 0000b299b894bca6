#pragma once

// Three generators for the same law. They share nothing beyond the
// parameter object, which is what makes pairwise agreement tests between
// them meaningful.

#include <cstddef>
#include <vector>

#include "harris/distribution.hpp"
#include "harris/rng.hpp"

namespace harris {

/// Negative-binomial genesis: Y ~ NB(1/m, 1/k) drawn as a gamma-Poisson
/// compound with the library's own variate generators; x = origin + kY.
std::vector<SupportPoint> sample_nb(const HarrisParams& params, RngStream& rng, std::size_t n);

/// Gamma mixture of Poisson: lambda ~ gamma(shape 1/k, scale m-1) (rate
/// 1/(m-1)), Y | lambda ~ Poisson(lambda), x = origin + kY. Uses Boost.Random.
std::vector<SupportPoint> sample_gamma_poisson(const HarrisParams& params, RngStream& rng, std::size_t n);

/// Inverse-DF sampling: quantile(params, U) with U uniform on (0, 1).
std::vector<SupportPoint> sample_inverse(const HarrisParams& params, RngStream& rng, std::size_t n);

/// Observed values of a sampled list.
std::vector<std::int64_t> values_of(const std::vector<SupportPoint>& points);

}  // namespace harris
