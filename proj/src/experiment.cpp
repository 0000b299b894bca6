#include "harris/experiment.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "harris/error.hpp"
#include "harris/sampling.hpp"

namespace harris {
namespace {

RepetitionOutcome run_repetition(const ExperimentSpec& spec, const HarrisParams& params, std::size_t index) {
  RngStream rng(spec.seed, static_cast<std::uint64_t>(index));
  const Sample sample(values_of(sample_nb(params, rng, spec.n)), static_cast<int>(params.origin()));
  RepetitionOutcome outcome;
  try {
    outcome.fit = spec.method == FitMethod::mle ? fit_mle(sample) : fit_moments(sample);
    outcome.ok = outcome.fit.m_hat > 1.0 && outcome.fit.k_hat > 0.0;
  } catch (const Error&) {
    outcome.ok = false;
  }
  return outcome;
}

void mean_and_se(const std::vector<double>& xs, std::optional<double>& mean, std::optional<double>& se) {
  if (xs.empty()) return;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  const double mu = sum / static_cast<double>(xs.size());
  mean = mu;
  if (xs.size() < 2) return;
  double ss = 0.0;
  for (const double x : xs) ss += (x - mu) * (x - mu);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  se = sd / std::sqrt(static_cast<double>(xs.size()));
}

}  // namespace

void ExperimentSpec::validate() const {
  make_params(m, static_cast<double>(k), variant);
  if (n < 2) throw Error(Errc::invalid_parameter, "sample size must be >= 2");
  if (reps < 1) throw Error(Errc::invalid_parameter, "repetitions must be >= 1");
}

ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned threads) {
  spec.validate();
  const HarrisParams params = make_params(spec.m, static_cast<double>(spec.k), spec.variant);

  ExperimentReport report;
  report.spec = spec;
  report.repetitions.resize(spec.reps);

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(spec.reps)));
  if (workers == 1) {
    for (std::size_t i = 0; i < spec.reps; ++i) report.repetitions[i] = run_repetition(spec, params, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < spec.reps; i = next++) {
          report.repetitions[i] = run_repetition(spec, params, i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<double> ms;
  std::vector<double> ks;
  for (const auto& rep : report.repetitions) {
    if (!rep.ok) {
      ++report.breakdowns;
      continue;
    }
    ms.push_back(rep.fit.m_hat);
    ks.push_back(rep.fit.k_hat);
  }
  mean_and_se(ms, report.m_mean, report.m_se);
  mean_and_se(ks, report.k_mean, report.k_se);
  return report;
}

}  // namespace harris
