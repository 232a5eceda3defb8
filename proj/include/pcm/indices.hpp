#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcm/matrix.hpp"
#include "pcm/priorities.hpp"
#include "pcm/random.hpp"

namespace pcm {

/// Which priority-derivation rule an index should use where its definition
/// admits either.
enum class WeightRule { geometric, eigenvector };

/// Saaty's Consistency Index, (lambda_max - n)/(n - 1). Zero exactly on
/// consistent matrices, positive otherwise.
double ci(const ComparisonMatrix& a);

/// Normalization table for the Consistency Ratio: order -> Random Index.
struct RandomIndexTable {
  enum class Source { monte_carlo, user_supplied };

  std::map<int, double> values;
  Source source = Source::user_supplied;
  RngSeed seed = 0;
  long samples = 0;

  void set(int order, double ri);
  /// Throws MissingRandomIndex if the order is absent.
  double at(int order) const;
};

/// Consistency Ratio CI/RI(n).
double cr(const ComparisonMatrix& a, const RandomIndexTable& table);

struct RiEstimate {
  double value = 0.0;
  long samples_used = 0;
  long skipped = 0;  // draws excluded by the skip-and-count policy
  double std_error = 0.0;
};

/// Mean Consistency Index over `samples` draws of random_pcm, one seed
/// substream per draw. Draws whose eigen solve fails to converge are skipped
/// and counted.
RiEstimate estimate_random_index(int order, double sigma, long samples, RngSeed seed);

/// Monte Carlo table over the given orders, recording provenance.
RandomIndexTable estimate_random_index_table(const std::vector<int>& orders, double sigma,
                                             long samples, RngSeed seed);

/// Golden-Wang index: mean absolute deviation between the column-normalized
/// matrix and the sum-one priority vector.
double gw(const ComparisonMatrix& a, WeightRule rule = WeightRule::geometric);

/// Geometric Consistency Index with geometric-mean weights.
double gci(const ComparisonMatrix& a);

/// Barzilai's relative error, computed on logs; exactly 0 for the all-ones
/// matrix, where the defining ratio degenerates.
double re(const ComparisonMatrix& a);

/// Pelaez-Lamata index: mean over triads of a_ik/(a_ij a_jk) + its
/// reciprocal - 2 (the 3x3 subdeterminant average).
double ci_star(const ComparisonMatrix& a);

/// Stein-Mizzi Harmonic Consistency Index from the column sums.
double hci(const ComparisonMatrix& a);

/// Normalization factor gamma for the Ramik-Korviny index; branches on
/// sigma vs (n/2)^(n/(n-2)).
double ni_gamma(int order, double sigma);

/// Ramik-Korviny index for matrices with entries in [1/sigma, sigma]
/// (checked with 1e-9 relative slack; EntriesOutOfScale otherwise).
double ni(const ComparisonMatrix& a, double sigma);

/// Axiom-independence witnesses from the characterization argument. Each is
/// deliberately defective in exactly one respect.
double i1(const ComparisonMatrix& a);                                   // clamps near-consistency to 0
double i2(const ComparisonMatrix& a, const std::vector<double>& triad_weights);  // order-sensitive
double i4(const ComparisonMatrix& a, double epsilon = 0.1);             // spread-scaled, non-monotone
double i5(const ComparisonMatrix& a, double consistency_tol = 1e-9);    // 0/1 step

/// Canonical unequal triad weights for i2: 1 + lexicographic rank, scaled to
/// mean 1. Needs at least two triads (order >= 4) to be non-constant.
std::vector<double> i2_default_weights(int order);

/// A named pure index with its consistency value and domain limits.
struct IndexDescriptor {
  std::string name;
  std::function<double(const ComparisonMatrix&)> evaluate;
  double nu = 0.0;
  std::string domain_note;
  double max_abs_entry = 0.0;  // 0 = unconstrained; else entries must lie in [1/m, m]
  int min_order = 3;
};

IndexDescriptor descriptor_ci();
IndexDescriptor descriptor_cr(std::shared_ptr<const RandomIndexTable> table);
IndexDescriptor descriptor_gw(WeightRule rule = WeightRule::geometric);
IndexDescriptor descriptor_gci();
IndexDescriptor descriptor_re();
IndexDescriptor descriptor_ci_star();
IndexDescriptor descriptor_hci();
IndexDescriptor descriptor_ni(double sigma);
IndexDescriptor descriptor_i1();
IndexDescriptor descriptor_i2();
IndexDescriptor descriptor_i4(double epsilon = 0.1);
IndexDescriptor descriptor_i5(double consistency_tol = 1e-9);

/// The seven classic indices in conformance-table order.
std::vector<IndexDescriptor> standard_descriptors(double sigma);

/// The four independence witnesses.
std::vector<IndexDescriptor> witness_descriptors();

}  // namespace pcm
