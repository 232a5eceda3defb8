#include "pcm/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pcm/io.hpp"

namespace pcm {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::a1: return "A1";
    case Axiom::a2: return "A2";
    case Axiom::a3: return "A3";
    case Axiom::a4: return "A4";
    case Axiom::a5: return "A5";
  }
  return "?";
}

const char* transform_kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::consistent_off_nu: return "consistent-off-nu";
    case TransformKind::inconsistent_at_nu: return "inconsistent-at-nu";
    case TransformKind::permutation: return "permutation";
    case TransformKind::power: return "power";
    case TransformKind::entry_power_pair: return "entry-power-pair";
    case TransformKind::entry_offset: return "entry-offset";
    case TransformKind::power_shrink: return "power-shrink";
  }
  return "?";
}

namespace {

// Substream phases, one per sampling site, so checkers stay reproducible and
// independent of each other.
enum Phase : std::uint64_t {
  phase_a1_consistent = 1,
  phase_a1_random,
  phase_a2_matrix,
  phase_a2_perm,
  phase_a3_matrix,
  phase_a4_matrix,
  phase_a4_entry,
  phase_a5_matrix,
  phase_a5_entry,
  phase_a5_consistent,
};

RngSeed stream(const CheckConfig& cfg, std::uint64_t phase, long ordinal) {
  return substream(substream(cfg.seed, phase), static_cast<std::uint64_t>(ordinal));
}

int order_for_sample(const IndexDescriptor& index, const CheckConfig& cfg, long ordinal) {
  const int lo = std::max(cfg.n_min, index.min_order);
  const int hi = std::max(cfg.n_max, lo);
  return lo + static_cast<int>(ordinal % (hi - lo + 1));
}

// Sampling scale that keeps the whole probe family inside the index's entry
// domain (if it declares one).
double draw_sigma(const IndexDescriptor& index, const CheckConfig& cfg, double stretch) {
  if (index.max_abs_entry <= 0.0) return cfg.sigma;
  const double bounded = std::pow(index.max_abs_entry, 1.0 / stretch);
  return std::max(std::min(cfg.sigma, bounded), 1.0 + 1e-9);
}

// Evaluation wrapper with the skip-and-count policy for domain and
// convergence failures.
std::optional<double> guarded_eval(const IndexDescriptor& index, const ComparisonMatrix& a,
                                   long& skipped) {
  try {
    return index.evaluate(a);
  } catch (const Error& e) {
    if (e.code() == Errc::entries_out_of_scale || e.code() == Errc::no_convergence) {
      ++skipped;
      return std::nullopt;
    }
    throw;
  }
}

ComparisonMatrix apply_entry_power(const ComparisonMatrix& a, int p, int q, double delta) {
  return with_entry(a, p, q, std::pow(a.at(p, q), delta));
}

AxiomReport make_report(Axiom axiom, const IndexDescriptor& index, const CheckConfig& cfg) {
  AxiomReport r;
  r.axiom = axiom;
  r.index_name = index.name;
  r.config_echo = config_echo(cfg);
  return r;
}

// Exponent-pair monotonicity probe for one base matrix and entry. Deltas are
// applied by direct entry replacement so values at or below zero (where the
// probed comparison crosses indifference) stay expressible.
bool probe_delta_pairs(const IndexDescriptor& index, const ComparisonMatrix& base, int p, int q,
                       const std::vector<double>& deltas, const CheckConfig& cfg,
                       AxiomReport& report) {
  std::vector<double> lo, hi;
  for (double d : deltas) (d < 1.0 ? lo : hi).push_back(d);
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());

  auto value_at = [&](double d) { return guarded_eval(index, apply_entry_power(base, p, q, d), report.skipped); };

  std::vector<std::pair<double, double>> lo_vals, hi_vals;
  for (double d : lo)
    if (auto v = value_at(d)) lo_vals.emplace_back(d, *v);
  for (double d : hi)
    if (auto v = value_at(d)) hi_vals.emplace_back(d, *v);

  auto emit = [&](double da, double vb_at_da, double db, double vb_at_db, double margin) {
    Witness w{base, TransformKind::entry_power_pair};
    w.p = p;
    w.q = q;
    w.param_a = da;
    w.param_b = db;
    w.observed_a = vb_at_da;
    w.observed_b = vb_at_db;
    w.margin = margin;
    report.verdict = Verdict::violated;
    report.witness = std::move(w);
  };

  // delta' < delta < 1 requires I(delta') >= I(delta).
  for (std::size_t i = 0; i < lo_vals.size(); ++i)
    for (std::size_t j = i + 1; j < lo_vals.size(); ++j) {
      if (lo_vals[i].second < lo_vals[j].second - cfg.violation_tol) {
        emit(lo_vals[i].first, lo_vals[i].second, lo_vals[j].first, lo_vals[j].second,
             lo_vals[j].second - lo_vals[i].second);
        return true;
      }
    }
  // 1 < delta < delta' requires I(delta') >= I(delta).
  for (std::size_t i = 0; i < hi_vals.size(); ++i)
    for (std::size_t j = i + 1; j < hi_vals.size(); ++j) {
      if (hi_vals[j].second < hi_vals[i].second - cfg.violation_tol) {
        emit(hi_vals[i].first, hi_vals[i].second, hi_vals[j].first, hi_vals[j].second,
             hi_vals[i].second - hi_vals[j].second);
        return true;
      }
    }
  return false;
}

// Shrinking-probe rule: a violation needs the final change to sit above the
// threshold *and* not to have decayed below half the largest change seen, so
// slowly-continuous indices (Hoelder-type rates) are not flagged.
bool shrink_probe_violates(const std::vector<double>& changes, const CheckConfig& cfg) {
  if (changes.empty()) return false;
  const double last = changes.back();
  const double peak = *std::max_element(changes.begin(), changes.end());
  return last > cfg.a5_threshold && last >= 0.5 * peak;
}

}  // namespace

std::string config_echo(const CheckConfig& cfg) {
  std::string out = "samples=" + std::to_string(cfg.samples) + " sigma=" + fmt_display(cfg.sigma) +
                    " seed=" + std::to_string(cfg.seed) + " n=" + std::to_string(cfg.n_min) + ".." +
                    std::to_string(cfg.n_max) + " violation_tol=" + fmt_display(cfg.violation_tol) +
                    " consistency_tol=" + fmt_display(cfg.consistency_tol) +
                    " a5_threshold=" + fmt_display(cfg.a5_threshold);
  out += " b_grid=";
  for (std::size_t i = 0; i < cfg.b_grid.size(); ++i)
    out += (i ? "|" : "") + fmt_display(cfg.b_grid[i]);
  out += " delta_grid=";
  for (std::size_t i = 0; i < cfg.delta_grid.size(); ++i)
    out += (i ? "|" : "") + fmt_display(cfg.delta_grid[i]);
  out += " h_sequence=";
  for (std::size_t i = 0; i < cfg.h_sequence.size(); ++i)
    out += (i ? "|" : "") + fmt_display(cfg.h_sequence[i]);
  out += cfg.seed_counterexamples ? " seed_counterexamples=on" : " seed_counterexamples=off";
  return out;
}

AxiomReport check_a1(const IndexDescriptor& index, const CheckConfig& cfg,
                     const std::vector<ComparisonMatrix>& extra_inconsistent) {
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  AxiomReport report = make_report(Axiom::a1, index, cfg);

  auto test_inconsistent = [&](const ComparisonMatrix& a) {
    if (is_consistent(a, cfg.consistency_tol)) return false;
    const auto v = guarded_eval(index, a, report.skipped);
    if (!v) return false;
    if (std::abs(*v - index.nu) <= cfg.violation_tol) {
      Witness w{a, TransformKind::inconsistent_at_nu};
      w.observed_a = *v;
      w.observed_b = index.nu;
      w.margin = max_transitivity_deviation(a);
      report.verdict = Verdict::violated;
      report.witness = std::move(w);
      return true;
    }
    return false;
  };

  for (const auto& a : extra_inconsistent) {
    ++report.samples_run;
    if (test_inconsistent(a)) return report;
  }

  for (long s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const int n = order_for_sample(index, cfg, s);
    const double sigma = draw_sigma(index, cfg, 1.0);

    const ComparisonMatrix cons = random_consistent(n, sigma, stream(cfg, phase_a1_consistent, s));
    if (const auto v = guarded_eval(index, cons, report.skipped)) {
      if (std::abs(*v - index.nu) > cfg.violation_tol) {
        Witness w{cons, TransformKind::consistent_off_nu};
        w.observed_a = *v;
        w.observed_b = index.nu;
        w.margin = std::abs(*v - index.nu);
        report.verdict = Verdict::violated;
        report.witness = std::move(w);
        return report;
      }
    }

    const ComparisonMatrix rnd = random_pcm(n, sigma, stream(cfg, phase_a1_random, s));
    if (test_inconsistent(rnd)) return report;
  }
  return report;
}

AxiomReport check_a2(const IndexDescriptor& index, const CheckConfig& cfg) {
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  AxiomReport report = make_report(Axiom::a2, index, cfg);

  for (long s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const int n = order_for_sample(index, cfg, s);
    const double sigma = draw_sigma(index, cfg, 1.0);
    const ComparisonMatrix a = random_pcm(n, sigma, stream(cfg, phase_a2_matrix, s));
    Rng perm_rng(stream(cfg, phase_a2_perm, s));
    const PermutationMap p = random_permutation(n, perm_rng);

    const auto v0 = guarded_eval(index, a, report.skipped);
    if (!v0) continue;
    const auto v1 = guarded_eval(index, permute(a, p), report.skipped);
    if (!v1) continue;
    if (std::abs(*v1 - *v0) > cfg.violation_tol) {
      Witness w{a, TransformKind::permutation};
      w.perm_image = p.image;
      w.observed_a = *v0;
      w.observed_b = *v1;
      w.margin = std::abs(*v1 - *v0);
      report.verdict = Verdict::violated;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

AxiomReport check_a3(const IndexDescriptor& index, const CheckConfig& cfg,
                     const std::vector<ComparisonMatrix>& extra_matrices) {
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  for (std::size_t i = 1; i < cfg.b_grid.size(); ++i) {
    if (cfg.b_grid[i] <= cfg.b_grid[i - 1]) fail(Errc::invalid_argument, "b_grid must ascend");
  }
  if (!cfg.b_grid.empty() && cfg.b_grid.front() <= 1.0) {
    fail(Errc::invalid_argument, "b_grid must lie in (1, inf)");
  }
  AxiomReport report = make_report(Axiom::a3, index, cfg);

  auto probe = [&](const ComparisonMatrix& a) {
    const auto v0 = guarded_eval(index, a, report.skipped);
    if (!v0) return false;
    for (double b : cfg.b_grid) {
      const auto vb = guarded_eval(index, hadamard_power(a, b), report.skipped);
      if (!vb) continue;
      if (*vb < *v0 - cfg.violation_tol) {
        Witness w{a, TransformKind::power};
        w.param_a = b;
        w.observed_a = *v0;
        w.observed_b = *vb;
        w.margin = *v0 - *vb;
        report.verdict = Verdict::violated;
        report.witness = std::move(w);
        return true;
      }
    }
    return false;
  };

  for (const auto& a : extra_matrices) {
    ++report.samples_run;
    if (probe(a)) return report;
  }
  const double b_max = cfg.b_grid.empty() ? 1.0 : cfg.b_grid.back();
  for (long s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const int n = order_for_sample(index, cfg, s);
    const double sigma = draw_sigma(index, cfg, b_max);
    if (probe(random_pcm(n, sigma, stream(cfg, phase_a3_matrix, s)))) return report;
  }
  return report;
}

AxiomReport check_a4(const IndexDescriptor& index, const CheckConfig& cfg,
                     const std::vector<PerturbSeed>& extra_seeds) {
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  AxiomReport report = make_report(Axiom::a4, index, cfg);

  for (const auto& seed_case : extra_seeds) {
    ++report.samples_run;
    if (probe_delta_pairs(index, seed_case.base, seed_case.p, seed_case.q, seed_case.deltas, cfg,
                          report)) {
      return report;
    }
  }

  double stretch = 1.0;
  for (double d : cfg.delta_grid) stretch = std::max(stretch, std::abs(d));

  for (long s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const int n = order_for_sample(index, cfg, s);
    const double sigma = draw_sigma(index, cfg, stretch);
    const ComparisonMatrix base = random_consistent(n, sigma, stream(cfg, phase_a4_matrix, s));

    // An entry with a_pq = 1 carries no signal; retry a few spots.
    Rng entry_rng(stream(cfg, phase_a4_entry, s));
    int p = -1, q = -1;
    for (int attempt = 0; attempt < 8; ++attempt) {
      const int i = static_cast<int>(entry_rng.below(static_cast<std::uint64_t>(n)));
      const int j = static_cast<int>(entry_rng.below(static_cast<std::uint64_t>(n)));
      if (i == j) continue;
      if (std::abs(std::log(base.at(i, j))) < 1e-3) continue;
      p = std::min(i, j);
      q = std::max(i, j);
      break;
    }
    if (p < 0) continue;
    if (probe_delta_pairs(index, base, p, q, cfg.delta_grid, cfg, report)) return report;
  }
  return report;
}

AxiomReport check_a5(const IndexDescriptor& index, const CheckConfig& cfg) {
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");
  for (std::size_t i = 1; i < cfg.h_sequence.size(); ++i) {
    if (cfg.h_sequence[i] >= cfg.h_sequence[i - 1]) {
      fail(Errc::invalid_argument, "h_sequence must strictly decrease");
    }
  }
  if (cfg.h_sequence.empty() || cfg.h_sequence.back() <= 0.0) {
    fail(Errc::invalid_argument, "h_sequence must stay positive");
  }
  AxiomReport report = make_report(Axiom::a5, index, cfg);
  const double h_max = cfg.h_sequence.front();

  auto offset_probe = [&](const ComparisonMatrix& base, int p, int q) {
    const auto v0 = guarded_eval(index, base, report.skipped);
    if (!v0) return false;
    std::vector<double> changes;
    double last_h = 0.0, last_val = 0.0;
    for (double h : cfg.h_sequence) {
      const auto vh =
          guarded_eval(index, with_entry(base, p, q, base.at(p, q) * (1.0 + h)), report.skipped);
      if (!vh) return false;
      changes.push_back(std::abs(*vh - *v0));
      last_h = h;
      last_val = *vh;
    }
    if (shrink_probe_violates(changes, cfg)) {
      Witness w{base, TransformKind::entry_offset};
      w.p = p;
      w.q = q;
      w.param_a = last_h;
      w.observed_a = *v0;
      w.observed_b = last_val;
      w.margin = changes.back();
      report.verdict = Verdict::violated;
      report.witness = std::move(w);
      return true;
    }
    return false;
  };

  for (long s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const int n = order_for_sample(index, cfg, s);
    const double sigma = draw_sigma(index, cfg, 1.0) / (1.0 + h_max);
    const double sigma_ok = std::max(sigma, 1.0 + 1e-9);

    Rng entry_rng(stream(cfg, phase_a5_entry, s));
    const int i0 = static_cast<int>(entry_rng.below(static_cast<std::uint64_t>(n)));
    int j0 = static_cast<int>(entry_rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j0 >= i0) ++j0;
    const int p = std::min(i0, j0), q = std::max(i0, j0);

    const ComparisonMatrix rnd = random_pcm(n, sigma_ok, stream(cfg, phase_a5_matrix, s));
    if (offset_probe(rnd, p, q)) return report;

    const ComparisonMatrix cons =
        random_consistent(n, sigma_ok, stream(cfg, phase_a5_consistent, s));
    if (offset_probe(cons, p, q)) return report;

    // Hadamard family A(b), b -> 0: the limit matrix is all-ones, so the
    // index must approach its value there.
    const auto v_ones = guarded_eval(index, ComparisonMatrix::ones(n), report.skipped);
    if (v_ones) {
      std::vector<double> changes;
      double last_b = 0.0, last_val = 0.0;
      bool complete = true;
      for (double b : cfg.h_sequence) {
        const auto vb = guarded_eval(index, hadamard_power(rnd, b), report.skipped);
        if (!vb) {
          complete = false;
          break;
        }
        changes.push_back(std::abs(*vb - *v_ones));
        last_b = b;
        last_val = *vb;
      }
      if (complete && shrink_probe_violates(changes, cfg)) {
        Witness w{rnd, TransformKind::power_shrink};
        w.param_a = last_b;
        w.observed_a = *v_ones;
        w.observed_b = last_val;
        w.margin = changes.back();
        report.verdict = Verdict::violated;
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

double replay_witness(const IndexDescriptor& index, const Witness& w) {
  switch (w.kind) {
    case TransformKind::consistent_off_nu:
      return std::abs(index.evaluate(w.base) - index.nu);
    case TransformKind::inconsistent_at_nu:
      return max_transitivity_deviation(w.base);
    case TransformKind::permutation: {
      const PermutationMap p(w.base.order(), w.perm_image);
      return std::abs(index.evaluate(permute(w.base, p)) - index.evaluate(w.base));
    }
    case TransformKind::power:
      return index.evaluate(w.base) - index.evaluate(hadamard_power(w.base, w.param_a));
    case TransformKind::entry_power_pair: {
      const double va = index.evaluate(apply_entry_power(w.base, w.p, w.q, w.param_a));
      const double vb = index.evaluate(apply_entry_power(w.base, w.p, w.q, w.param_b));
      return w.param_b < 1.0 ? vb - va : va - vb;
    }
    case TransformKind::entry_offset: {
      const double v0 = index.evaluate(w.base);
      const double vh =
          index.evaluate(with_entry(w.base, w.p, w.q, w.base.at(w.p, w.q) * (1.0 + w.param_a)));
      return std::abs(vh - v0);
    }
    case TransformKind::power_shrink: {
      const double v_ones = index.evaluate(ComparisonMatrix::ones(w.base.order()));
      return std::abs(index.evaluate(hadamard_power(w.base, w.param_a)) - v_ones);
    }
  }
  fail(Errc::invalid_argument, "unknown witness kind");
}

AxiomReport check_axiom(Axiom axiom, const IndexDescriptor& index, const CheckConfig& cfg) {
  const CounterexampleSeeds seeds =
      cfg.seed_counterexamples ? counterexample_seeds(index.name) : CounterexampleSeeds{};
  switch (axiom) {
    case Axiom::a1: return check_a1(index, cfg, seeds.a1_matrices);
    case Axiom::a2: return check_a2(index, cfg);
    case Axiom::a3: return check_a3(index, cfg, seeds.a3_matrices);
    case Axiom::a4: return check_a4(index, cfg, seeds.a4_seeds);
    case Axiom::a5: return check_a5(index, cfg);
  }
  fail(Errc::invalid_argument, "unknown axiom");
}

namespace {

ComparisonMatrix matrix4(double a01, double a02, double a03, double a12, double a13, double a23) {
  return ComparisonMatrix::from_upper(4, {a01, a02, a03, a12, a13, a23});
}

}  // namespace

ComparisonMatrix a4_counterexample_base() {
  return matrix4(1.0 / 3, 1.0 / 3, 1.0 / 9, 1.0, 1.0 / 3, 1.0 / 3);
}

CounterexampleSeeds counterexample_seeds(const std::string& index_name) {
  CounterexampleSeeds seeds;
  if (index_name == "ni") {
    // Entry (1,4): exponents placing a_14 at 2 and at 0.5, the non-monotone
    // pair on the scale-bounded index (both on the delta < 1 leg).
    const double d = std::log(2.0) / std::log(1.0 / 9.0);
    seeds.a4_seeds.push_back({a4_counterexample_base(), 0, 3, {d, -d}});
  } else if (index_name == "re") {
    // The relative-error non-monotonicity lives beyond the sign crossing of
    // the probed comparison: exponents -2 and -1 on the same base.
    seeds.a4_seeds.push_back({a4_counterexample_base(), 0, 3, {-2.0, -1.0}});
  } else if (index_name == "hci") {
    // One column below 1 off-diagonal: harmonic index decays to 0 under
    // intensification although the matrix is inconsistent.
    seeds.a3_matrices.push_back(matrix4(4.0, 0.5, 2.0, 0.25, 2.0, 2.0));
  } else if (index_name == "gw") {
    // One row dominating every column: Golden-Wang decays to 0 under
    // intensification.
    seeds.a3_matrices.push_back(matrix4(3.0, 0.25, 2.0, 1.0 / 7, 2.0, 6.0));
  } else if (index_name == "i1") {
    // Mildly inconsistent triad with ci_star below the clamp: maps onto nu.
    seeds.a1_matrices.push_back(ComparisonMatrix::from_upper(3, {2.0, 4.2, 2.0}));
  }
  return seeds;
}

Expectation known_expectation(const std::string& index_name, Axiom axiom) {
  const int k = static_cast<int>(axiom);
  auto row = [k](std::array<Expectation, 5> cells) { return cells[static_cast<std::size_t>(k)]; };
  const Expectation Y = Expectation::satisfied;
  const Expectation N = Expectation::violated_proven;
  const Expectation U = Expectation::unknown;
  if (index_name == "ci" || index_name == "cr") return row({Y, Y, Y, Y, Y});
  if (index_name == "gw") return row({Y, Y, N, U, Y});
  if (index_name == "gci") return row({Y, Y, Y, Y, Y});
  if (index_name == "re") return row({Y, Y, Y, N, N});
  if (index_name == "ci_star") return row({Y, Y, Y, Y, Y});
  if (index_name == "hci") return row({Y, Y, N, Y, Y});
  if (index_name == "ni") return row({Y, Y, U, N, Y});
  if (index_name == "i1") return row({N, Y, Y, Y, Y});
  if (index_name == "i2") return row({Y, N, Y, Y, Y});
  if (index_name == "i4") return row({Y, Y, Y, N, Y});
  if (index_name == "i5") return row({Y, Y, Y, Y, N});
  return U;
}

bool has_known_expectations(const std::string& index_name) {
  static const char* const known[] = {"ci", "cr", "gw",  "gci", "re", "ci_star",
                                      "hci", "ni", "i1", "i2",  "i4", "i5"};
  for (const char* k : known)
    if (index_name == k) return true;
  return false;
}

ConformanceTable conformance_table(const std::vector<IndexDescriptor>& indices,
                                   const CheckConfig& cfg) {
  if (indices.empty()) fail(Errc::invalid_argument, "index list must not be empty");
  if (cfg.samples < 1) fail(Errc::invalid_argument, "samples must be >= 1");

  ConformanceTable table;
  table.config = cfg;
  for (const auto& index : indices) {
    table.index_names.push_back(index.name);
    std::array<ConformanceCell, 5> row_cells{};
    for (Axiom axiom : kAllAxioms) {
      ConformanceCell cell;
      cell.report = check_axiom(axiom, index, cfg);
      const Expectation expect = has_known_expectations(index.name)
                                     ? known_expectation(index.name, axiom)
                                     : Expectation::satisfied;
      if (cell.report.verdict == Verdict::violated) {
        cell.label = "violated";
      } else {
        cell.label = expect == Expectation::unknown ? "searched-no-violation"
                                                    : "no-violation-found";
      }
      // Self-check: every violation with a documented counterexample must be
      // rediscovered. i4's violation is search-dependent, so it is exempt.
      if (expect == Expectation::violated_proven && index.name != "i4") {
        cell.self_check_ok = cell.report.verdict == Verdict::violated;
        if (!cell.self_check_ok) table.self_check_passed = false;
      }
      row_cells[static_cast<std::size_t>(static_cast<int>(axiom))] = std::move(cell);
    }
    table.cells.push_back(std::move(row_cells));
  }
  return table;
}

namespace {

std::string witness_to_text(const Witness& w) {
  std::string out = "witness kind=";
  out += transform_kind_name(w.kind);
  if (w.p >= 0) out += " p=" + std::to_string(w.p + 1) + " q=" + std::to_string(w.q + 1);
  if (!w.perm_image.empty()) {
    out += " perm=";
    for (std::size_t i = 0; i < w.perm_image.size(); ++i)
      out += (i ? "|" : "") + std::to_string(w.perm_image[i]);
  }
  if (w.kind == TransformKind::power || w.kind == TransformKind::entry_offset ||
      w.kind == TransformKind::power_shrink) {
    out += " param=" + fmt_full(w.param_a);
  }
  if (w.kind == TransformKind::entry_power_pair) {
    out += " delta=" + fmt_full(w.param_a) + " delta2=" + fmt_full(w.param_b);
  }
  out += " observed=" + fmt_full(w.observed_a) + " observed2=" + fmt_full(w.observed_b) +
         " margin=" + fmt_full(w.margin) + "\n";
  out += "witness-matrix:\n";
  out += matrix_to_csv(w.base);
  out += "end-witness\n";
  return out;
}

}  // namespace

std::string report_to_text(const AxiomReport& report) {
  std::string out = "index=" + report.index_name + " axiom=" + axiom_name(report.axiom) +
                    " verdict=" +
                    (report.verdict == Verdict::violated ? "violated" : "no-violation-found") +
                    " samples=" + std::to_string(report.samples_run) +
                    " skipped=" + std::to_string(report.skipped) + "\n";
  if (report.witness) out += witness_to_text(*report.witness);
  return out;
}

std::string table_to_text(const ConformanceTable& table) {
  std::string out = "# axiom conformance\n";
  out += "config: " + config_echo(table.config) + "\n";
  for (std::size_t i = 0; i < table.index_names.size(); ++i) {
    for (Axiom axiom : kAllAxioms) {
      out += report_to_text(table.cells[i][static_cast<std::size_t>(static_cast<int>(axiom))].report);
    }
  }
  out += "table:\n";
  out += table_to_csv(table);
  out += table.self_check_passed ? "self-check: passed\n" : "self-check: FAILED\n";
  return out;
}

std::string table_to_csv(const ConformanceTable& table) {
  std::string out = "index,A1,A2,A3,A4,A5\n";
  for (std::size_t i = 0; i < table.index_names.size(); ++i) {
    out += table.index_names[i];
    for (const auto& cell : table.cells[i]) {
      out += ',';
      out += cell.label;
    }
    out += '\n';
  }
  return out;
}

SweepCurve sweep_entry(const IndexDescriptor& index, const ComparisonMatrix& a, int p, int q,
                       const std::vector<double>& values) {
  const int n = a.order();
  if (p < 0 || p >= n || q < 0 || q >= n || p == q) {
    fail(Errc::index_out_of_range, "(p,q) = (" + std::to_string(p + 1) + "," +
                                       std::to_string(q + 1) + ") for order " + std::to_string(n));
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) fail(Errc::invalid_argument, "sweep values must ascend");
  }
  SweepCurve curve;
  curve.parameter_name = "a_" + std::to_string(p + 1) + std::to_string(q + 1);
  curve.points.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0)) fail(Errc::invalid_argument, "sweep values must be > 0");
    curve.points.emplace_back(v, index.evaluate(with_entry(a, p, q, v)));
  }
  return curve;
}

SweepCurve sweep_power(const IndexDescriptor& index, const ComparisonMatrix& a,
                       const std::vector<double>& b_grid) {
  for (std::size_t i = 1; i < b_grid.size(); ++i) {
    if (b_grid[i] <= b_grid[i - 1]) fail(Errc::invalid_argument, "b grid must ascend");
  }
  SweepCurve curve;
  curve.parameter_name = "b";
  curve.points.reserve(b_grid.size());
  for (double b : b_grid) curve.points.emplace_back(b, index.evaluate(hadamard_power(a, b)));
  return curve;
}

std::string curve_to_csv(const SweepCurve& curve) {
  std::string out = "param,value\n";
  for (const auto& [x, y] : curve.points) {
    out += fmt_full(x);
    out += ',';
    out += fmt_full(y);
    out += '\n';
  }
  return out;
}

}  // namespace pcm
