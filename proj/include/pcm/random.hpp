#pragma once

#include <cstdint>
#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

using RngSeed = std::uint64_t;

/// SplitMix64 generator. Small, portable and fully determined by its seed,
/// which keeps every sampled artifact byte-reproducible across runs.
class Rng {
 public:
  explicit Rng(RngSeed seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

/// Independent substream for sample ordinal `index` of a run seeded with
/// `seed`. Partitioning by ordinal keeps parallel or reordered evaluation
/// reproducible.
RngSeed substream(RngSeed seed, std::uint64_t index);

/// Consistent matrix a_ij = w_i/w_j from a random positive weight vector,
/// with every entry inside [1/sigma, sigma]. Requires sigma > 1.
ComparisonMatrix random_consistent(int order, double sigma, RngSeed seed);

/// Each upper-triangle entry drawn independently, log-uniform on
/// [1/sigma, sigma], so x and 1/x are equally likely. Requires sigma > 1.
ComparisonMatrix random_pcm(int order, double sigma, RngSeed seed);

/// Uniformly random permutation (Fisher-Yates).
PermutationMap random_permutation(int order, Rng& rng);

}  // namespace pcm
