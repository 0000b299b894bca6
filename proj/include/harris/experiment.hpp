#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "harris/distribution.hpp"
#include "harris/estimation.hpp"

namespace harris {

struct ExperimentSpec {
  double m = 2.0;
  std::int64_t k = 1;
  Variant variant = Variant::H1;
  std::size_t n = 100;
  std::size_t reps = 50;
  FitMethod method = FitMethod::moments;
  std::uint64_t seed = 0;

  /// Errc::invalid_parameter unless n >= 2, reps >= 1 and (m, k) are valid.
  void validate() const;
};

struct RepetitionOutcome {
  bool ok = false;
  FitResult fit;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<RepetitionOutcome> repetitions;  // by repetition index
  std::size_t breakdowns = 0;                  // failed fits or m_hat <= 1
  std::optional<double> m_mean;
  std::optional<double> k_mean;
  std::optional<double> m_se;  // sd / sqrt(successful reps); needs >= 2 of them
  std::optional<double> k_se;
};

/// Repetition i simulates from RngStream(seed, i) with sample_nb and fits
/// with the chosen method. Repetitions are spread over `threads` workers;
/// results are gathered by index, so the report does not depend on the
/// thread count.
ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned threads = 1);

}  // namespace harris
