#include "pcm/priorities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pcm {

PriorityVector geometric_mean_weights(const ComparisonMatrix& a) {
  const int n = a.order();
  PriorityVector out;
  out.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (int j = 0; j < n; ++j) log_sum += std::log(a.at(i, j));
    out.weights[static_cast<std::size_t>(i)] = std::exp(log_sum / n);
  }
  return out;
}

EigenResult principal_eigen(const ComparisonMatrix& a, double tol, int max_iter) {
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "eigen tolerance must be > 0");
  if (max_iter < 1) fail(Errc::invalid_argument, "max_iter must be >= 1");

  const int n = a.order();
  const std::vector<double> dense = a.dense();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> av(static_cast<std::size_t>(n));

  double lambda = static_cast<double>(n);
  double residual = 0.0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = dense.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) s += row[j] * v[static_cast<std::size_t>(j)];
      av[static_cast<std::size_t>(i)] = s;
    }
    lambda = 0.0;
    for (int i = 0; i < n; ++i) lambda += av[static_cast<std::size_t>(i)] / v[static_cast<std::size_t>(i)];
    lambda /= n;

    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = std::abs(av[static_cast<std::size_t>(i)] - lambda * v[static_cast<std::size_t>(i)]) /
                       (v[static_cast<std::size_t>(i)] * lambda);
      residual = std::max(residual, r);
    }
    if (residual <= tol) {
      EigenResult out;
      out.lambda_max = lambda;
      out.vector.weights = v;
      out.vector.normalization = PriorityVector::Normalization::sum_one;
      out.iterations = iter;
      out.residual = residual;
      return out;
    }
    double sum = 0.0;
    for (double x : av) sum += x;
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)] / sum;
  }
  fail(Errc::no_convergence, "residual " + std::to_string(residual) + " > tol after " +
                                 std::to_string(max_iter) + " iterations");
}

PriorityVector normalize_sum_one(const PriorityVector& w) {
  double sum = 0.0;
  for (double x : w.weights) sum += x;
  PriorityVector out;
  out.weights.reserve(w.weights.size());
  for (double x : w.weights) out.weights.push_back(x / sum);
  out.normalization = PriorityVector::Normalization::sum_one;
  return out;
}

}  // namespace pcm
