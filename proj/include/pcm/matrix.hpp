#pragma once

#include <cstddef>
#include <vector>

#include "pcm/error.hpp"

namespace pcm {

/// Positive reciprocal square matrix of pairwise preference ratios.
///
/// Only the strict upper triangle is stored, in row-major order. The diagonal
/// is implicitly 1 and the lower triangle is derived as 1/a_ij on access, so
/// reciprocity is structural: a(j,i) always returns exactly 1.0/a(i,j) and no
/// amount of mutation through the public operations can break it.
class ComparisonMatrix {
 public:
  /// Validates a full n-by-n grid and keeps its upper triangle.
  /// The lower triangle and diagonal are checked against `reciprocity_tol`
  /// (|a_ij*a_ji - 1| and |a_ii - 1|) and then discarded.
  static ComparisonMatrix from_grid(const std::vector<std::vector<double>>& grid,
                                    double reciprocity_tol = 1e-6);

  /// Builds from an already-canonical upper triangle, row-major, of length
  /// n*(n-1)/2. Entries must be finite and strictly positive.
  static ComparisonMatrix from_upper(int order, std::vector<double> upper);

  /// The n-by-n matrix with every entry 1 (full indifference).
  static ComparisonMatrix ones(int order);

  int order() const { return order_; }

  /// Entry a_ij; i == j gives 1, i > j gives the derived reciprocal.
  double at(int i, int j) const;

  const std::vector<double>& upper() const { return upper_; }

  /// Full row-major n*n copy, reciprocals materialized.
  std::vector<double> dense() const;

  bool operator==(const ComparisonMatrix& other) const = default;

 private:
  ComparisonMatrix(int order, std::vector<double> upper)
      : order_(order), upper_(std::move(upper)) {}

  int order_ = 0;
  std::vector<double> upper_;
};

/// Index of the stored entry a_ij for i < j.
inline std::size_t upper_index(int order, int i, int j) {
  return static_cast<std::size_t>(i) * order - static_cast<std::size_t>(i) * (i + 1) / 2 +
         (j - i - 1);
}

inline double ComparisonMatrix::at(int i, int j) const {
  if (i == j) return 1.0;
  if (i < j) return upper_[upper_index(order_, i, j)];
  return 1.0 / upper_[upper_index(order_, j, i)];
}

/// Row/column relabeling of the alternatives. `image[k]` is the new position
/// of old index k.
struct PermutationMap {
  int order = 0;
  std::vector<int> image;

  PermutationMap(int order, std::vector<int> image);

  static PermutationMap identity(int order);
  static PermutationMap transposition(int order, int a, int b);

  PermutationMap inverse() const;
  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
};

/// One off-diagonal comparison raised to an exponent, reciprocal kept in sync.
struct PerturbationSpec {
  int p = 0;
  int q = 0;
  double delta = 1.0;
};

/// True iff every triad satisfies a_ik = a_ij*a_jk within `tol` relative.
/// Checking i < j < k suffices given structural reciprocity.
bool is_consistent(const ComparisonMatrix& a, double tol = 1e-9);

/// max over triads of |a_ik/(a_ij*a_jk) - 1|; 0 on consistent matrices.
double max_transitivity_deviation(const ComparisonMatrix& a);

/// Relabels alternatives: entry (i,j) of the result is a at the preimages.
ComparisonMatrix permute(const ComparisonMatrix& a, const PermutationMap& p);

/// Entry-wise power a_ij^b. Preserves reciprocity and consistency; b = 0
/// yields the all-ones matrix, b = 1 the identity transformation.
ComparisonMatrix hadamard_power(const ComparisonMatrix& a, double b);

/// a_pq -> a_pq^delta together with a_qp -> a_qp^delta; everything else kept.
/// Requires delta > 0 and finite; symmetric in (p,q) swap.
ComparisonMatrix perturb_entry(const ComparisonMatrix& a, const PerturbationSpec& spec);

/// Copy of `a` with a_pq = value (and a_qp = 1/value). The primitive behind
/// entry sweeps; `value` must be finite and > 0.
ComparisonMatrix with_entry(const ComparisonMatrix& a, int p, int q, double value);

}  // namespace pcm
