#include "harris/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "harris/error.hpp"

namespace harris::gof {
namespace {

double upper_tail(double statistic, int dof) {
  if (dof < 1) return 1.0;
  if (!std::isfinite(statistic)) return 0.0;
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareResult chi_square_gof(const HarrisParams& params, std::span<const std::int64_t> values,
                               double min_expected) {
  const double n = static_cast<double>(values.size());
  if (!(n >= 2.0 * min_expected)) throw Error(Errc::domain_error, "sample too small for the pooled chi-square test");

  std::map<std::int64_t, double> counts;
  for (const auto x : values) {
    const auto r = lattice_index(params, x);
    if (!r) return {std::numeric_limits<double>::infinity(), 0, 0.0};
    counts[*r] += 1.0;
  }

  struct Cell {
    double observed = 0.0;
    double expected = 0.0;
  };
  std::vector<Cell> cells;
  Cell current;
  double observed_so_far = 0.0;
  const auto table = pmf_table(params, 0);
  double prob = table.front().probability;
  const double shape = params.shape();
  const double q = params.q();
  for (std::int64_t r = 0;; ++r) {
    const auto it = counts.find(r);
    const double obs = it == counts.end() ? 0.0 : it->second;
    current.observed += obs;
    current.expected += n * prob;
    observed_so_far += obs;
    if (current.expected >= min_expected) {
      cells.push_back(current);
      current = Cell{};
      const double tail_expected = n * survival(params, static_cast<double>(support_point(params, r).x));
      if (tail_expected < min_expected) {
        cells.back().observed += n - observed_so_far;
        cells.back().expected += tail_expected;
        break;
      }
    }
    const double rr = static_cast<double>(r);
    prob *= (shape + rr) / (rr + 1.0) * q;
  }

  double statistic = 0.0;
  for (const auto& c : cells) {
    const double d = c.observed - c.expected;
    statistic += d * d / c.expected;
  }
  const int dof = static_cast<int>(cells.size()) - 1;
  return {statistic, dof, upper_tail(statistic, dof)};
}

ChiSquareResult chi_square_two_sample(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                      double min_count) {
  if (a.empty() || b.empty()) throw Error(Errc::domain_error, "two-sample test needs two non-empty samples");
  std::map<std::int64_t, std::pair<double, double>> counts;
  for (const auto x : a) counts[x].first += 1.0;
  for (const auto x : b) counts[x].second += 1.0;

  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> current{0.0, 0.0};
  for (const auto& [value, c] : counts) {
    current.first += c.first;
    current.second += c.second;
    if (current.first + current.second >= min_count) {
      cells.push_back(current);
      current = {0.0, 0.0};
    }
  }
  if (current.first + current.second > 0.0) {
    if (cells.empty()) {
      cells.push_back(current);
    } else {
      cells.back().first += current.first;
      cells.back().second += current.second;
    }
  }

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ka = std::sqrt(nb / na);
  const double kb = std::sqrt(na / nb);
  double statistic = 0.0;
  for (const auto& [ca, cb] : cells) {
    const double d = ka * ca - kb * cb;
    statistic += d * d / (ca + cb);
  }
  const int dof = static_cast<int>(cells.size()) - 1;
  return {statistic, dof, upper_tail(statistic, dof)};
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double distance = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    distance = std::max({distance, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return distance;
}

Summary summarize(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return {mean, values.size() > 1 ? ss / (n - 1.0) : 0.0};
}

Summary summarize(std::span<const std::int64_t> values) {
  std::vector<double> as_real(values.begin(), values.end());
  return summarize(std::span<const double>(as_real));
}

}  // namespace harris::gof
