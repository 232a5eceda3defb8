#include <doctest.h>

#include <cmath>

#include "pcm/random.hpp"

using namespace pcm;

TEST_CASE("consistent generator: range, transitivity, determinism") {
  for (RngSeed seed : {1ULL, 42ULL, 987654321ULL}) {
    const auto a = random_consistent(4, 9.0, seed);
    CHECK(is_consistent(a, 1e-9));
    for (double v : a.dense()) {
      CHECK(v >= 1.0 / 9.0 - 1e-12);
      CHECK(v <= 9.0 + 1e-12);
    }
  }
  CHECK(random_consistent(5, 9.0, 7) == random_consistent(5, 9.0, 7));

  // A vanishing scale bound forces all weights together: the draw approaches
  // the all-ones matrix.
  const auto near_ones = random_consistent(4, 1.0 + 1e-12, 3);
  for (double v : near_ones.upper()) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-11));
  }

  CHECK_THROWS_AS(random_consistent(4, 1.0, 1), Error);
  CHECK_THROWS_AS(random_consistent(2, 9.0, 1), Error);
}

TEST_CASE("log-uniform generator: range and seed separation") {
  const auto a = random_pcm(3, 9.0, 7);
  for (double v : a.dense()) {
    CHECK(v >= 1.0 / 9.0 - 1e-12);
    CHECK(v <= 9.0 + 1e-12);
  }
  CHECK(random_pcm(3, 9.0, 7) == a);

  int distinct = 0;
  for (RngSeed s = 0; s < 20; ++s) {
    if (!(random_pcm(4, 9.0, s) == random_pcm(4, 9.0, s + 1))) ++distinct;
  }
  CHECK(distinct == 20);

  CHECK_THROWS_AS(random_pcm(3, 0.5, 1), Error);
}

TEST_CASE("substreams decorrelate sample ordinals") {
  const RngSeed base = 99;
  CHECK(substream(base, 0) != substream(base, 1));
  CHECK(substream(base, 1) == substream(base, 1));
  CHECK(substream(base, 0) != substream(base + 1, 0));
}

TEST_CASE("unit doubles stay in [0,1)") {
  Rng rng(123);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
