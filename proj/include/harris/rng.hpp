#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace harris {

/// Reproducible random stream identified by (seed, stream_id).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq; both are
/// fully specified by the standard, and uniforms are formed from raw 53-bit
/// words rather than std:: distributions, so a given (seed, stream_id)
/// produces the same sequence on every conforming platform. Distinct
/// stream ids give independent streams. Single owner; not thread-safe.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on the open interval (0, 1).
  double uniform_open() noexcept { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  // UniformRandomBitGenerator interface, for Boost.Random distributions.
  static constexpr result_type min() noexcept { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

namespace variates {

/// Standard normal, Marsaglia polar method.
double normal(RngStream& rng);

/// Gamma(shape, scale) by Marsaglia-Tsang; shapes below 1 are boosted to
/// shape + 1 and multiplied by U^(1/shape).
double gamma(RngStream& rng, double shape, double scale);

/// Poisson(lambda): sequential inversion for lambda < 10, Hormann's
/// transformed rejection (PTRS) above.
std::int64_t poisson(RngStream& rng, double lambda);

}  // namespace variates
}  // namespace harris
