#include "harris/sampling.hpp"

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

namespace harris {

std::vector<SupportPoint> sample_nb(const HarrisParams& params, RngStream& rng, std::size_t n) {
  std::vector<SupportPoint> out;
  out.reserve(n);
  const double shape = params.shape();
  // NB(p, beta) mixes Poisson over gamma(beta, scale q/p), and q/p = m - 1.
  const double scale = params.m() - 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = variates::gamma(rng, shape, scale);
    out.push_back(support_point(params, variates::poisson(rng, lambda)));
  }
  return out;
}

std::vector<SupportPoint> sample_gamma_poisson(const HarrisParams& params, RngStream& rng, std::size_t n) {
  std::vector<SupportPoint> out;
  out.reserve(n);
  boost::random::gamma_distribution<double> mixing(params.shape(), params.m() - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = mixing(rng);
    std::int64_t y = 0;
    if (lambda > 0.0) {
      boost::random::poisson_distribution<std::int64_t, double> count(lambda);
      y = count(rng);
    }
    out.push_back(support_point(params, y));
  }
  return out;
}

std::vector<SupportPoint> sample_inverse(const HarrisParams& params, RngStream& rng, std::size_t n) {
  std::vector<SupportPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(quantile(params, rng.uniform_open()));
  return out;
}

std::vector<std::int64_t> values_of(const std::vector<SupportPoint>& points) {
  std::vector<std::int64_t> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.x);
  return out;
}

}  // namespace harris
