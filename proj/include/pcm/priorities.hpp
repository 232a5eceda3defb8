#pragma once

#include <vector>

#include "pcm/matrix.hpp"

namespace pcm {

/// Positive weights ranking the alternatives.
struct PriorityVector {
  enum class Normalization { raw, sum_one };

  std::vector<double> weights;
  Normalization normalization = Normalization::raw;
};

/// Perron root and eigenvector of a comparison matrix, with the achieved
/// accuracy. `residual` is max_i |(A v)_i - lambda v_i| / (v_i * lambda), the
/// relative eigenpair defect; it is <= the requested tolerance on success.
struct EigenResult {
  double lambda_max = 0.0;
  PriorityVector vector;
  int iterations = 0;
  double residual = 0.0;
};

/// w_i = (prod_j a_ij)^(1/n), computed as exp of the mean log to stay clear
/// of overflow for extreme entries.
PriorityVector geometric_mean_weights(const ComparisonMatrix& a);

/// Power iteration from the all-ones vector with per-step sum-normalization.
/// lambda_max is the mean of the component-wise ratios (A v)_i / v_i of the
/// converged vector. Convergence is guaranteed for positive matrices; throws
/// NoConvergence (reporting residual and iteration count) if the relative
/// residual is still above `tol` after `max_iter` steps.
EigenResult principal_eigen(const ComparisonMatrix& a, double tol = 1e-12,
                            int max_iter = 100000);

/// Divides each weight by the total; tags the result sum-one.
PriorityVector normalize_sum_one(const PriorityVector& w);

}  // namespace pcm
