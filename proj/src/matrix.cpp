#include "pcm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pcm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_square: return "NotSquare";
    case Errc::order_too_small: return "OrderTooSmall";
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::reciprocity_violated: return "ReciprocityViolated";
    case Errc::diagonal_not_one: return "DiagonalNotOne";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::diagonal_perturbation: return "DiagonalPerturbation";
    case Errc::invalid_sigma: return "InvalidSigma";
    case Errc::parse_error: return "ParseError";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::missing_random_index: return "MissingRandomIndex";
    case Errc::entries_out_of_scale: return "EntriesOutOfScale";
    case Errc::invalid_triad_weights: return "InvalidTriadWeights";
    case Errc::invalid_epsilon: return "InvalidEpsilon";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

void check_positive_finite(double v, int i, int j) {
  if (!std::isfinite(v) || v <= 0.0) {
    fail(Errc::non_positive_entry,
         "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
             std::to_string(v));
  }
}

}  // namespace

ComparisonMatrix ComparisonMatrix::from_grid(const std::vector<std::vector<double>>& grid,
                                             double reciprocity_tol) {
  const int n = static_cast<int>(grid.size());
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != n) {
      fail(Errc::not_square, "grid has " + std::to_string(n) + " rows but a row of length " +
                                 std::to_string(row.size()));
    }
  }
  if (n < 3) fail(Errc::order_too_small, "order " + std::to_string(n) + " < 3");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) check_positive_finite(grid[i][j], i, j);

  for (int i = 0; i < n; ++i) {
    if (std::abs(grid[i][i] - 1.0) > reciprocity_tol) {
      fail(Errc::diagonal_not_one,
           "a_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
               std::to_string(grid[i][i]));
    }
  }
  std::vector<double> upper;
  upper.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(grid[i][j] * grid[j][i] - 1.0) > reciprocity_tol) {
        fail(Errc::reciprocity_violated,
             "a_ij*a_ji = " + std::to_string(grid[i][j] * grid[j][i]) + " at (" +
                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      upper.push_back(grid[i][j]);
    }
  }
  return ComparisonMatrix(n, std::move(upper));
}

ComparisonMatrix ComparisonMatrix::from_upper(int order, std::vector<double> upper) {
  if (order < 3) fail(Errc::order_too_small, "order " + std::to_string(order) + " < 3");
  const std::size_t expected = static_cast<std::size_t>(order) * (order - 1) / 2;
  if (upper.size() != expected) {
    fail(Errc::invalid_argument, "upper triangle length " + std::to_string(upper.size()) +
                                     ", expected " + std::to_string(expected));
  }
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      check_positive_finite(upper[upper_index(order, i, j)], i, j);
  return ComparisonMatrix(order, std::move(upper));
}

ComparisonMatrix ComparisonMatrix::ones(int order) {
  if (order < 3) fail(Errc::order_too_small, "order " + std::to_string(order) + " < 3");
  return ComparisonMatrix(order,
                          std::vector<double>(static_cast<std::size_t>(order) * (order - 1) / 2, 1.0));
}

std::vector<double> ComparisonMatrix::dense() const {
  std::vector<double> out(static_cast<std::size_t>(order_) * order_);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) out[static_cast<std::size_t>(i) * order_ + j] = at(i, j);
  return out;
}

PermutationMap::PermutationMap(int order_in, std::vector<int> image_in)
    : order(order_in), image(std::move(image_in)) {
  if (static_cast<int>(image.size()) != order) {
    fail(Errc::invalid_argument, "permutation image length mismatch");
  }
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (int v : image) {
    if (v < 0 || v >= order || seen[static_cast<std::size_t>(v)]) {
      fail(Errc::invalid_argument, "permutation image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PermutationMap PermutationMap::identity(int order) {
  std::vector<int> img(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) img[static_cast<std::size_t>(i)] = i;
  return PermutationMap(order, std::move(img));
}

PermutationMap PermutationMap::transposition(int order, int a, int b) {
  auto p = identity(order);
  std::swap(p.image[static_cast<std::size_t>(a)], p.image[static_cast<std::size_t>(b)]);
  return p;
}

PermutationMap PermutationMap::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) inv[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
  return PermutationMap(order, std::move(inv));
}

bool is_consistent(const ComparisonMatrix& a, double tol) {
  return max_transitivity_deviation(a) <= tol;
}

double max_transitivity_deviation(const ComparisonMatrix& a) {
  const int n = a.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double dev = std::abs(a.at(i, k) / (a.at(i, j) * a.at(j, k)) - 1.0);
        worst = std::max(worst, dev);
      }
  return worst;
}

ComparisonMatrix permute(const ComparisonMatrix& a, const PermutationMap& p) {
  const int n = a.order();
  if (p.order != n) fail(Errc::order_mismatch, "matrix order " + std::to_string(n) +
                                                   " vs permutation order " + std::to_string(p.order));
  const PermutationMap inv = p.inverse();
  std::vector<double> upper(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      upper[upper_index(n, i, j)] = a.at(inv(i), inv(j));
  return ComparisonMatrix::from_upper(n, std::move(upper));
}

ComparisonMatrix hadamard_power(const ComparisonMatrix& a, double b) {
  if (!std::isfinite(b)) fail(Errc::invalid_argument, "exponent must be finite");
  std::vector<double> upper = a.upper();
  for (double& v : upper) v = std::pow(v, b);
  return ComparisonMatrix::from_upper(a.order(), std::move(upper));
}

ComparisonMatrix perturb_entry(const ComparisonMatrix& a, const PerturbationSpec& spec) {
  const int n = a.order();
  if (spec.p < 0 || spec.p >= n || spec.q < 0 || spec.q >= n) {
    fail(Errc::index_out_of_range, "(p,q) = (" + std::to_string(spec.p + 1) + "," +
                                       std::to_string(spec.q + 1) + ") for order " +
                                       std::to_string(n));
  }
  if (spec.p == spec.q) fail(Errc::diagonal_perturbation, "p == q");
  if (!std::isfinite(spec.delta) || spec.delta <= 0.0) {
    fail(Errc::invalid_argument, "delta must be finite and > 0");
  }
  // Raising the stored upper entry covers both orientations: a_qp^delta is
  // exactly the reciprocal of a_pq^delta.
  const int i = std::min(spec.p, spec.q);
  const int j = std::max(spec.p, spec.q);
  std::vector<double> upper = a.upper();
  double& v = upper[upper_index(n, i, j)];
  v = std::pow(v, spec.delta);
  return ComparisonMatrix::from_upper(n, std::move(upper));
}

ComparisonMatrix with_entry(const ComparisonMatrix& a, int p, int q, double value) {
  const int n = a.order();
  if (p < 0 || p >= n || q < 0 || q >= n) {
    fail(Errc::index_out_of_range, "(p,q) = (" + std::to_string(p + 1) + "," +
                                       std::to_string(q + 1) + ") for order " + std::to_string(n));
  }
  if (p == q) fail(Errc::diagonal_perturbation, "p == q");
  if (!std::isfinite(value) || value <= 0.0) {
    fail(Errc::non_positive_entry, "replacement value " + std::to_string(value));
  }
  std::vector<double> upper = a.upper();
  if (p < q) {
    upper[upper_index(n, p, q)] = value;
  } else {
    upper[upper_index(n, q, p)] = 1.0 / value;
  }
  return ComparisonMatrix::from_upper(n, std::move(upper));
}

}  // namespace pcm
