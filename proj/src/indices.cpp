#include "pcm/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace pcm {

double ci(const ComparisonMatrix& a) {
  const EigenResult eig = principal_eigen(a);
  const int n = a.order();
  return (eig.lambda_max - n) / (n - 1);
}

void RandomIndexTable::set(int order, double ri) {
  if (!(ri > 0.0) || !std::isfinite(ri)) {
    fail(Errc::invalid_argument, "RI(" + std::to_string(order) + ") = " + std::to_string(ri) +
                                     ", must be > 0");
  }
  values[order] = ri;
}

double RandomIndexTable::at(int order) const {
  const auto it = values.find(order);
  if (it == values.end()) {
    fail(Errc::missing_random_index, "no RI value for order " + std::to_string(order));
  }
  return it->second;
}

double cr(const ComparisonMatrix& a, const RandomIndexTable& table) {
  return ci(a) / table.at(a.order());
}

RiEstimate estimate_random_index(int order, double sigma, long samples, RngSeed seed) {
  if (samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  RiEstimate out;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long s = 0; s < samples; ++s) {
    const ComparisonMatrix a = random_pcm(order, sigma, substream(seed, static_cast<std::uint64_t>(s)));
    try {
      const double v = ci(a);
      sum += v;
      sum_sq += v * v;
      ++out.samples_used;
    } catch (const Error& e) {
      if (e.code() != Errc::no_convergence) throw;
      ++out.skipped;
    }
  }
  if (out.samples_used == 0) {
    fail(Errc::no_convergence, "all " + std::to_string(samples) + " draws failed to converge");
  }
  const double m = sum / static_cast<double>(out.samples_used);
  out.value = m;
  if (out.samples_used > 1) {
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(out.samples_used) * m * m) /
                          static_cast<double>(out.samples_used - 1));
    out.std_error = std::sqrt(var / static_cast<double>(out.samples_used));
  }
  return out;
}

RandomIndexTable estimate_random_index_table(const std::vector<int>& orders, double sigma,
                                             long samples, RngSeed seed) {
  RandomIndexTable table;
  table.source = RandomIndexTable::Source::monte_carlo;
  table.seed = seed;
  table.samples = samples;
  for (int n : orders) {
    // Per-order substream keyed off the order itself, so adding orders to the
    // list never changes existing rows.
    table.set(n, estimate_random_index(n, sigma, samples, substream(seed, static_cast<std::uint64_t>(n))).value);
  }
  return table;
}

double gw(const ComparisonMatrix& a, WeightRule rule) {
  const int n = a.order();
  std::vector<double> col_sum(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) col_sum[static_cast<std::size_t>(j)] += a.at(i, j);

  PriorityVector w = rule == WeightRule::geometric ? geometric_mean_weights(a)
                                                   : principal_eigen(a).vector;
  w = normalize_sum_one(w);

  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      total += std::abs(a.at(i, j) / col_sum[static_cast<std::size_t>(j)] -
                        w.weights[static_cast<std::size_t>(i)]);
  return total / n;
}

double gci(const ComparisonMatrix& a) {
  const int n = a.order();
  const PriorityVector w = geometric_mean_weights(a);
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double e = std::log(a.at(i, j) * w.weights[static_cast<std::size_t>(j)] /
                                w.weights[static_cast<std::size_t>(i)]);
      total += e * e;
    }
  return 2.0 * total / (static_cast<double>(n - 1) * (n - 2));
}

double re(const ComparisonMatrix& a) {
  const bool all_ones = std::all_of(a.upper().begin(), a.upper().end(),
                                    [](double v) { return v == 1.0; });
  if (all_ones) return 0.0;

  const int n = a.order();
  std::vector<double> row_mean(static_cast<std::size_t>(n), 0.0);
  double denom = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double l = std::log(a.at(i, j));
      row_mean[static_cast<std::size_t>(i)] += l;
      denom += l * l;
    }
    row_mean[static_cast<std::size_t>(i)] /= n;
  }
  double numer = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d = row_mean[static_cast<std::size_t>(i)] - row_mean[static_cast<std::size_t>(j)];
      numer += d * d;
    }
  return 1.0 - numer / denom;
}

double ci_star(const ComparisonMatrix& a) {
  const int n = a.order();
  double total = 0.0;
  long triads = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double x = a.at(i, k) / (a.at(i, j) * a.at(j, k));
        total += x + 1.0 / x - 2.0;
        ++triads;
      }
  return total / static_cast<double>(triads);
}

double hci(const ComparisonMatrix& a) {
  const int n = a.order();
  double recip_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a.at(i, j);
    recip_sum += 1.0 / s;
  }
  const double hm = n / recip_sum;
  return (hm - n) * (n + 1) / (static_cast<double>(n) * (n - 1));
}

double ni_gamma(int order, double sigma) {
  if (order < 3) fail(Errc::order_too_small, "order " + std::to_string(order) + " < 3");
  if (!(sigma > 1.0)) fail(Errc::invalid_sigma, "sigma must be > 1");
  const double n = static_cast<double>(order);
  const double first = sigma - std::pow(sigma, (2.0 - 2.0 * n) / n);
  double second;
  if (sigma < std::pow(n / 2.0, n / (n - 2.0))) {
    second = sigma * sigma *
             (std::pow(2.0 / n, 2.0 / (n - 2.0)) - std::pow(2.0 / n, n / (n - 2.0)));
  } else {
    second = std::pow(sigma, (2.0 * n - 2.0) / n) - sigma;
  }
  return 1.0 / std::max(first, second);
}

double ni(const ComparisonMatrix& a, double sigma) {
  if (!(sigma > 1.0)) fail(Errc::invalid_sigma, "sigma must be > 1");
  const int n = a.order();
  const double hi = sigma * (1.0 + 1e-9);
  const double lo = (1.0 / sigma) * (1.0 - 1e-9);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = a.at(i, j);
      if (v < lo || v > hi) {
        fail(Errc::entries_out_of_scale,
             "entry " + std::to_string(v) + " outside [1/" + std::to_string(sigma) + ", " +
                 std::to_string(sigma) + "]");
      }
    }
  const PriorityVector w = geometric_mean_weights(a);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(w.weights[static_cast<std::size_t>(i)] /
                                           w.weights[static_cast<std::size_t>(j)] -
                                       a.at(i, j)));
  return ni_gamma(n, sigma) * worst;
}

double i1(const ComparisonMatrix& a) { return std::max(ci_star(a) - 1.0, 0.0); }

double i2(const ComparisonMatrix& a, const std::vector<double>& triad_weights) {
  const int n = a.order();
  const std::size_t triads =
      static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
  if (triad_weights.size() != triads) {
    fail(Errc::invalid_triad_weights, "expected " + std::to_string(triads) + " weights, got " +
                                          std::to_string(triad_weights.size()));
  }
  bool all_equal = true;
  for (double w : triad_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      fail(Errc::invalid_triad_weights, "weights must be finite and > 0");
    }
    if (w != triad_weights.front()) all_equal = false;
  }
  if (all_equal) fail(Errc::invalid_triad_weights, "weights must not be all equal");

  double total = 0.0;
  std::size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double x = a.at(i, k) / (a.at(i, j) * a.at(j, k));
        total += (x + 1.0 / x - 2.0) * triad_weights[t++];
      }
  return total;
}

double i4(const ComparisonMatrix& a, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    fail(Errc::invalid_epsilon, "epsilon must be finite and > 0");
  }
  const int n = a.order();
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double m = std::max(a.at(i, j), a.at(j, i));
      hi = std::max(hi, m);
      lo = std::min(lo, m);
    }
  return (hi - lo + epsilon) * std::pow(ci_star(a), 0.1);
}

double i5(const ComparisonMatrix& a, double consistency_tol) {
  return is_consistent(a, consistency_tol) ? 0.0 : 1.0;
}

std::vector<double> i2_default_weights(int order) {
  const std::size_t triads =
      static_cast<std::size_t>(order) * (order - 1) * (order - 2) / 6;
  std::vector<double> w(triads);
  const double mean = (static_cast<double>(triads) + 1.0) / 2.0;
  for (std::size_t r = 0; r < triads; ++r) w[r] = (static_cast<double>(r) + 1.0) / mean;
  return w;
}

IndexDescriptor descriptor_ci() {
  return {"ci", [](const ComparisonMatrix& a) { return ci(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_cr(std::shared_ptr<const RandomIndexTable> table) {
  return {"cr", [table](const ComparisonMatrix& a) { return cr(a, *table); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_gw(WeightRule rule) {
  return {"gw", [rule](const ComparisonMatrix& a) { return gw(a, rule); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_gci() {
  return {"gci", [](const ComparisonMatrix& a) { return gci(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_re() {
  return {"re", [](const ComparisonMatrix& a) { return re(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_ci_star() {
  return {"ci_star", [](const ComparisonMatrix& a) { return ci_star(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_hci() {
  return {"hci", [](const ComparisonMatrix& a) { return hci(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_ni(double sigma) {
  return {"ni", [sigma](const ComparisonMatrix& a) { return ni(a, sigma); }, 0.0,
          "entries within [1/sigma, sigma]", sigma, 3};
}

IndexDescriptor descriptor_i1() {
  return {"i1", [](const ComparisonMatrix& a) { return i1(a); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_i2() {
  return {"i2",
          [](const ComparisonMatrix& a) { return i2(a, i2_default_weights(a.order())); }, 0.0,
          "canonical unequal triad weights; order >= 4", 0.0, 4};
}

IndexDescriptor descriptor_i4(double epsilon) {
  return {"i4", [epsilon](const ComparisonMatrix& a) { return i4(a, epsilon); }, 0.0, "", 0.0, 3};
}

IndexDescriptor descriptor_i5(double consistency_tol) {
  return {"i5",
          [consistency_tol](const ComparisonMatrix& a) { return i5(a, consistency_tol); }, 0.0,
          "", 0.0, 3};
}

std::vector<IndexDescriptor> standard_descriptors(double sigma) {
  return {descriptor_ci(),      descriptor_gw(),  descriptor_gci(), descriptor_re(),
          descriptor_ci_star(), descriptor_hci(), descriptor_ni(sigma)};
}

std::vector<IndexDescriptor> witness_descriptors() {
  return {descriptor_i1(), descriptor_i2(), descriptor_i4(), descriptor_i5()};
}

}  // namespace pcm
