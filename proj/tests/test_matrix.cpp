#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "pcm/matrix.hpp"
#include "pcm/random.hpp"

using namespace pcm;

namespace {

bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("grid construction validates and canonicalizes") {
  const auto a = fixtures::perm_example();
  CHECK(a.order() == 3);
  CHECK(a.upper() == std::vector<double>{2.0, 5.0, 2.0});
  CHECK(a.at(1, 0) == 0.5);
  CHECK(a.at(0, 0) == 1.0);

  CHECK(ComparisonMatrix::from_grid({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}).upper() ==
        std::vector<double>{1.0, 1.0, 1.0});

  CHECK(throws_code(Errc::order_too_small,
                    [] { ComparisonMatrix::from_grid({{1, 2}, {0.5, 1}}); }));
  CHECK(throws_code(Errc::not_square,
                    [] { ComparisonMatrix::from_grid({{1, 2, 5}, {0.5, 1}, {0.2, 0.5, 1}}); }));
  CHECK(throws_code(Errc::non_positive_entry, [] {
    ComparisonMatrix::from_grid({{1, 0, 5}, {0.5, 1, 2}, {0.2, 0.5, 1}});
  }));
  CHECK(throws_code(Errc::reciprocity_violated, [] {
    ComparisonMatrix::from_grid({{1, 2, 5}, {0.6, 1, 2}, {0.2, 0.5, 1}});
  }));
  CHECK(throws_code(Errc::diagonal_not_one, [] {
    ComparisonMatrix::from_grid({{1, 2, 5}, {0.5, 1.5, 2}, {0.2, 0.5, 1}});
  }));

  // Hand-entered decimals within the ingestion tolerance are accepted.
  CHECK(ComparisonMatrix::from_grid({{1, 5, 5}, {0.2, 1, 5}, {0.2, 0.2, 1}}).at(0, 1) == 5.0);
}

TEST_CASE("reciprocity is structural") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const auto a = random_pcm(n, 9.0, rng.next_u64());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CHECK(a.at(j, i) == 1.0 / a.at(i, j));  // exact, not approximate
      }
  }
}

TEST_CASE("transitivity check") {
  CHECK(is_consistent(fixtures::consistent3(), 1e-9));
  CHECK_FALSE(is_consistent(fixtures::cyclic3(), 1e-9));
  // upper-triangle triad of cyclic3: x = 0.5/(2*2) = 1/8, deviation 7/8
  CHECK(max_transitivity_deviation(fixtures::cyclic3()) ==
        doctest::Approx(0.875).epsilon(1e-12));
  for (int s = 0; s < 20; ++s) {
    CHECK(is_consistent(random_consistent(3 + s % 5, 9.0, 100 + static_cast<RngSeed>(s)), 1e-9));
  }
}

TEST_CASE("permutation relabels and preserves the entry multiset") {
  const auto a = fixtures::perm_example();
  const auto swapped = permute(a, PermutationMap::transposition(3, 0, 1));
  CHECK(swapped.upper() == std::vector<double>{0.5, 2.0, 5.0});

  CHECK(permute(a, PermutationMap::identity(3)) == a);

  // Orientation flips re-derive reciprocals, so round trips and multisets
  // agree to one ulp rather than bitwise.
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const auto m = random_pcm(n, 9.0, rng.next_u64());
    const auto p = random_permutation(n, rng);
    const auto q = permute(m, p);

    const auto back = permute(q, p.inverse());
    REQUIRE(back.order() == n);
    for (std::size_t i = 0; i < m.upper().size(); ++i) {
      CHECK(back.upper()[i] == doctest::Approx(m.upper()[i]).epsilon(1e-15));
    }

    auto d1 = m.dense();
    auto d2 = q.dense();
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    for (std::size_t i = 0; i < d1.size(); ++i) {
      CHECK(d2[i] == doctest::Approx(d1[i]).epsilon(1e-15));
    }
  }

  CHECK(throws_code(Errc::order_mismatch,
                    [&] { permute(a, PermutationMap::identity(4)); }));
}

TEST_CASE("hadamard power") {
  const auto a = fixtures::cyclic3();
  const auto cubed = hadamard_power(a, 3.0);
  CHECK(cubed.upper() == std::vector<double>{8.0, 0.125, 8.0});

  const auto flat = hadamard_power(a, 0.0);
  for (double v : flat.upper()) CHECK(v == 1.0);

  CHECK(is_consistent(hadamard_power(fixtures::consistent3(), 2.0), 1e-9));

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const auto m = random_pcm(n, 9.0, rng.next_u64());
    for (double b : {2.0, 3.0, 0.5}) {
      const auto roundtrip = hadamard_power(hadamard_power(m, b), 1.0 / b);
      for (std::size_t i = 0; i < m.upper().size(); ++i) {
        CHECK(roundtrip.upper()[i] == doctest::Approx(m.upper()[i]).epsilon(1e-12));
      }
      // Consistency status survives intensification and weakening.
      CHECK(is_consistent(hadamard_power(m, b), 1e-6) == is_consistent(m, 1e-6));
    }
  }
}

TEST_CASE("single-entry perturbation") {
  const auto a = fixtures::consistent3();

  const double delta5 = std::log(5.0) / std::log(4.0);
  const auto pushed = perturb_entry(a, {0, 2, delta5});
  CHECK(pushed.at(0, 2) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(pushed.at(0, 1) == 2.0);

  const double delta9 = std::log(9.0) / std::log(4.0);
  CHECK(perturb_entry(a, {0, 2, delta9}).at(0, 2) == doctest::Approx(9.0).epsilon(1e-14));

  CHECK(perturb_entry(a, {0, 2, 1.0}) == a);
  CHECK(perturb_entry(a, {0, 2, 2.0}) == perturb_entry(a, {2, 0, 2.0}));

  CHECK(throws_code(Errc::index_out_of_range, [&] { perturb_entry(a, {0, 3, 2.0}); }));
  CHECK(throws_code(Errc::diagonal_perturbation, [&] { perturb_entry(a, {1, 1, 2.0}); }));
  CHECK(throws_code(Errc::invalid_argument, [&] { perturb_entry(a, {0, 1, -1.0}); }));
}

TEST_CASE("entry replacement") {
  const auto a = fixtures::weighted4();
  const auto b = with_entry(a, 0, 3, 0.5);
  CHECK(b.at(0, 3) == 0.5);
  CHECK(b.at(3, 0) == 2.0);
  const auto c = with_entry(a, 3, 0, 2.0);  // same update, stated from below
  CHECK(c.at(0, 3) == 0.5);
  CHECK(throws_code(Errc::non_positive_entry, [&] { with_entry(a, 0, 3, 0.0); }));
  CHECK(throws_code(Errc::diagonal_perturbation, [&] { with_entry(a, 2, 2, 2.0); }));
}
