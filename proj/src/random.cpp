#include "pcm/random.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace pcm {

RngSeed substream(RngSeed seed, std::uint64_t index) {
  Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return mixer.next_u64();
}

namespace {

void check_sigma(double sigma) {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    fail(Errc::invalid_sigma, "sigma = " + std::to_string(sigma) + ", must be > 1");
  }
}

}  // namespace

ComparisonMatrix random_consistent(int order, double sigma, RngSeed seed) {
  if (order < 3) fail(Errc::order_too_small, "order " + std::to_string(order) + " < 3");
  check_sigma(sigma);
  Rng rng(seed);
  // Log-weights in [-ln(sigma)/2, ln(sigma)/2] bound every ratio w_i/w_j by
  // [1/sigma, sigma].
  const double half = 0.5 * std::log(sigma);
  std::vector<double> u(static_cast<std::size_t>(order));
  for (double& v : u) v = rng.uniform(-half, half);
  std::vector<double> upper(static_cast<std::size_t>(order) * (order - 1) / 2);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      upper[upper_index(order, i, j)] =
          std::exp(u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)]);
  return ComparisonMatrix::from_upper(order, std::move(upper));
}

ComparisonMatrix random_pcm(int order, double sigma, RngSeed seed) {
  if (order < 3) fail(Errc::order_too_small, "order " + std::to_string(order) + " < 3");
  check_sigma(sigma);
  Rng rng(seed);
  const double span = std::log(sigma);
  std::vector<double> upper(static_cast<std::size_t>(order) * (order - 1) / 2);
  for (double& v : upper) v = std::exp(rng.uniform(-span, span));
  return ComparisonMatrix::from_upper(order, std::move(upper));
}

PermutationMap random_permutation(int order, Rng& rng) {
  std::vector<int> img(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = order - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(img[static_cast<std::size_t>(i)], img[j]);
  }
  return PermutationMap(order, std::move(img));
}

}  // namespace pcm
