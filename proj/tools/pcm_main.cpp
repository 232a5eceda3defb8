// pcm: evaluate inconsistency indices on comparison-matrix CSV files, run the
// axiom conformance table, generate sweep data, generate matrices, and
// estimate Random Index values.
//
// Exit codes: 0 success, 1 conformance self-check failure, 2 usage/validation
// errors, 3 missing Random Index data.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcm/axioms.hpp"
#include "pcm/indices.hpp"
#include "pcm/io.hpp"
#include "pcm/matrix.hpp"

namespace {

using pcm::ComparisonMatrix;
using pcm::IndexDescriptor;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct IndexOptions {
  std::optional<double> sigma;
  std::string ri_table_path;
  long ri_samples = 10000;
  pcm::RngSeed seed = 1;
  double i4_epsilon = 0.1;
  double i5_tol = 1e-9;
};

std::shared_ptr<const pcm::RandomIndexTable> load_or_estimate_ri(const IndexOptions& opt,
                                                                 int order) {
  if (!opt.ri_table_path.empty()) {
    return std::make_shared<const pcm::RandomIndexTable>(pcm::read_ri_table(opt.ri_table_path));
  }
  auto table = pcm::estimate_random_index_table({order}, opt.sigma.value_or(9.0), opt.ri_samples,
                                                opt.seed);
  return std::make_shared<const pcm::RandomIndexTable>(std::move(table));
}

IndexDescriptor make_descriptor(const std::string& name, const IndexOptions& opt, int order) {
  if (name == "ci") return pcm::descriptor_ci();
  if (name == "cr") return pcm::descriptor_cr(load_or_estimate_ri(opt, order));
  if (name == "gw") return pcm::descriptor_gw();
  if (name == "gci") return pcm::descriptor_gci();
  if (name == "re") return pcm::descriptor_re();
  if (name == "ci_star") return pcm::descriptor_ci_star();
  if (name == "hci") return pcm::descriptor_hci();
  if (name == "ni") {
    if (!opt.sigma) {
      pcm::fail(pcm::Errc::invalid_sigma, "index ni requires an explicit --sigma");
    }
    return pcm::descriptor_ni(*opt.sigma);
  }
  if (name == "i1") return pcm::descriptor_i1();
  if (name == "i2") return pcm::descriptor_i2();
  if (name == "i4") return pcm::descriptor_i4(opt.i4_epsilon);
  if (name == "i5") return pcm::descriptor_i5(opt.i5_tol);
  pcm::fail(pcm::Errc::invalid_argument, "unknown index '" + name + "'");
}

std::vector<std::string> expand_index_list(const std::string& list, const IndexOptions& opt,
                                           int order) {
  if (list != "all") return split_list(list);
  std::vector<std::string> names = {"ci", "cr", "gw", "gci", "re", "ci_star", "hci"};
  if (opt.sigma) names.push_back("ni");
  names.push_back("i1");
  if (order >= 4) names.push_back("i2");
  names.push_back("i4");
  names.push_back("i5");
  return names;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) pcm::fail(pcm::Errc::parse_error, "cannot open '" + out_path + "' for writing");
  out << text;
}

std::vector<double> make_grid(double lo, double hi, int points, bool log_scale) {
  if (points < 1) pcm::fail(pcm::Errc::invalid_argument, "points must be >= 1");
  if (!(lo < hi) && points > 1) pcm::fail(pcm::Errc::invalid_argument, "grid needs min < max");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  if (log_scale && !(lo > 0.0)) {
    pcm::fail(pcm::Errc::invalid_argument, "log-scale grid needs min > 0");
  }
  for (int k = 0; k < points; ++k) {
    const double t = static_cast<double>(k) / (points - 1);
    grid.push_back(log_scale ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  return grid;
}

int run_eval(const std::string& matrix_path, const std::string& index_list,
             const IndexOptions& opt, double tol, const std::string& format,
             const std::string& out_path) {
  const ComparisonMatrix a = pcm::read_matrix_csv(matrix_path);
  const auto names = expand_index_list(index_list, opt, a.order());
  std::string text = format == "csv" ? "index,value,nu,consistent\n" : "";
  for (const auto& name : names) {
    const IndexDescriptor d = make_descriptor(name, opt, a.order());
    const double v = d.evaluate(a);
    const bool consistent = std::abs(v - d.nu) <= tol;
    if (format == "csv") {
      text += d.name + "," + pcm::fmt_display(v) + "," + pcm::fmt_display(d.nu) + "," +
              (consistent ? "yes" : "no") + "\n";
    } else {
      text += d.name + " " + pcm::fmt_display(v) + " " + pcm::fmt_display(d.nu) + " " +
              (consistent ? "consistent" : "inconsistent") + "\n";
    }
  }
  emit(text, out_path);
  return 0;
}

int run_conformance(const std::string& index_list, const std::string& axiom_list,
                    const IndexOptions& opt, pcm::CheckConfig cfg, const std::string& format,
                    const std::string& out_path) {
  std::vector<IndexDescriptor> descriptors;
  for (const auto& name : split_list(index_list))
    descriptors.push_back(make_descriptor(name, opt, cfg.n_max));

  if (axiom_list == "all") {
    const pcm::ConformanceTable table = pcm::conformance_table(descriptors, cfg);
    emit(format == "csv" ? pcm::table_to_csv(table) : pcm::table_to_text(table), out_path);
    return table.self_check_passed ? 0 : 1;
  }

  std::vector<pcm::Axiom> axioms;
  for (const auto& name : split_list(axiom_list)) {
    bool found = false;
    for (pcm::Axiom ax : pcm::kAllAxioms) {
      std::string lower = pcm::axiom_name(ax);
      lower[0] = 'a';
      if (name == lower || name == pcm::axiom_name(ax)) {
        axioms.push_back(ax);
        found = true;
      }
    }
    if (!found) pcm::fail(pcm::Errc::invalid_argument, "unknown axiom '" + name + "'");
  }

  std::string text;
  bool self_check_ok = true;
  for (const auto& d : descriptors) {
    for (pcm::Axiom ax : axioms) {
      const pcm::AxiomReport report = pcm::check_axiom(ax, d, cfg);
      text += pcm::report_to_text(report);
      if (pcm::has_known_expectations(d.name) && d.name != "i4" &&
          pcm::known_expectation(d.name, ax) == pcm::Expectation::violated_proven &&
          report.verdict != pcm::Verdict::violated) {
        self_check_ok = false;
      }
    }
  }
  text += self_check_ok ? "self-check: passed\n" : "self-check: FAILED\n";
  emit(text, out_path);
  return self_check_ok ? 0 : 1;
}

int run_sweep(const std::string& kind, const std::string& matrix_path, const std::string& index,
              const IndexOptions& opt, int p, int q, double lo, double hi, int points,
              bool log_scale, const std::string& out_path) {
  const ComparisonMatrix a = pcm::read_matrix_csv(matrix_path);
  const IndexDescriptor d = make_descriptor(index, opt, a.order());
  const std::vector<double> grid = make_grid(lo, hi, points, log_scale);
  pcm::SweepCurve curve;
  if (kind == "entry") {
    // CLI entries are 1-based, matching written matrices; the library is 0-based.
    curve = pcm::sweep_entry(d, a, p - 1, q - 1, grid);
  } else {
    curve = pcm::sweep_power(d, a, grid);
  }
  emit(pcm::curve_to_csv(curve), out_path);
  return 0;
}

int run_gen(const std::string& kind, int n, double sigma, pcm::RngSeed seed,
            const std::string& out_path) {
  const ComparisonMatrix a = kind == "consistent" ? pcm::random_consistent(n, sigma, seed)
                                                  : pcm::random_pcm(n, sigma, seed);
  emit(pcm::matrix_to_csv(a), out_path);
  return 0;
}

int run_ri(const std::string& n_list, double sigma, long samples, pcm::RngSeed seed,
           const std::string& out_path) {
  std::vector<int> orders;
  for (const auto& tok : split_list(n_list)) orders.push_back(std::stoi(tok));
  if (orders.empty()) pcm::fail(pcm::Errc::invalid_argument, "no orders given");
  const pcm::RandomIndexTable table = pcm::estimate_random_index_table(orders, sigma, samples, seed);
  emit(pcm::ri_table_to_csv(table), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inconsistency indices and axiom conformance for pairwise comparison matrices"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "plain";
  pcm::RngSeed seed = 1;
  double eval_tol = 1e-8;
  app.add_option("--out", out_path, "output file (stdout if omitted)");
  app.add_option("--format", format, "plain or csv")->check(CLI::IsMember({"plain", "csv"}));
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--tol", eval_tol, "consistency flag tolerance on |value - nu|");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate indices on a matrix file");
  std::string eval_matrix, eval_indices = "all", ri_table_path;
  double sigma_opt = 0.0;
  long ri_samples = 10000;
  double i4_epsilon = 0.1, i5_tol = 1e-9;
  eval_cmd->add_option("matrix", eval_matrix, "matrix CSV file")->required();
  eval_cmd->add_option("--indices", eval_indices, "comma list or 'all'");
  eval_cmd->add_option("--sigma", sigma_opt, "scale bound for ni");
  eval_cmd->add_option("--ri-table", ri_table_path, "Random Index table file for cr");
  eval_cmd->add_option("--ri-samples", ri_samples, "Monte Carlo samples for cr's default table");
  eval_cmd->add_option("--i4-epsilon", i4_epsilon, "epsilon for i4");
  eval_cmd->add_option("--i5-tol", i5_tol, "transitivity tolerance for i5");

  // conformance
  auto* conf_cmd = app.add_subcommand("conformance", "run the axiom conformance table");
  std::string conf_indices = "ci,gw,gci,re,ci_star,hci,ni";
  std::string conf_axioms = "all";
  pcm::CheckConfig cfg;
  bool no_seeding = false;
  conf_cmd->add_option("--indices", conf_indices, "comma list of index names");
  conf_cmd->add_option("--axioms", conf_axioms, "comma list (a1..a5) or 'all'");
  conf_cmd->add_option("--samples", cfg.samples, "random samples per check");
  conf_cmd->add_option("--sigma", cfg.sigma, "sampling scale bound");
  conf_cmd->add_option("--n-min", cfg.n_min, "smallest sampled order");
  conf_cmd->add_option("--n-max", cfg.n_max, "largest sampled order");
  conf_cmd->add_option("--violation-tol", cfg.violation_tol, "margin for violation verdicts");
  conf_cmd->add_option("--consistency-tol", cfg.consistency_tol, "transitivity tolerance");
  conf_cmd->add_option("--a5-threshold", cfg.a5_threshold, "continuity probe threshold");
  conf_cmd->add_flag("--no-seed-counterexamples", no_seeding,
                     "disable injection of the known counterexamples");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "generate sweep-curve CSV data");
  std::string sweep_kind, sweep_matrix, sweep_index;
  int sweep_p = 1, sweep_q = 2, sweep_points = 100;
  double sweep_min = 1.0, sweep_max = 2.0;
  std::string sweep_scale = "lin";
  sweep_cmd->add_option("kind", sweep_kind, "entry or power")
      ->required()
      ->check(CLI::IsMember({"entry", "power"}));
  sweep_cmd->add_option("matrix", sweep_matrix, "matrix CSV file")->required();
  sweep_cmd->add_option("--index", sweep_index, "index name")->required();
  sweep_cmd->add_option("--sigma", sigma_opt, "scale bound for ni");
  sweep_cmd->add_option("--p", sweep_p, "row of the swept entry (1-based)");
  sweep_cmd->add_option("--q", sweep_q, "column of the swept entry (1-based)");
  sweep_cmd->add_option("--min", sweep_min, "grid start")->required();
  sweep_cmd->add_option("--max", sweep_max, "grid end")->required();
  sweep_cmd->add_option("--points", sweep_points, "number of grid points");
  sweep_cmd->add_option("--scale", sweep_scale, "lin or log")
      ->check(CLI::IsMember({"lin", "log"}));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a matrix CSV");
  std::string gen_kind;
  int gen_n = 4;
  double gen_sigma = 9.0;
  gen_cmd->add_option("kind", gen_kind, "consistent or random")
      ->required()
      ->check(CLI::IsMember({"consistent", "random"}));
  gen_cmd->add_option("--n", gen_n, "order")->required();
  gen_cmd->add_option("--sigma", gen_sigma, "scale bound");

  // ri
  auto* ri_cmd = app.add_subcommand("ri", "estimate Random Index values");
  std::string ri_orders;
  double ri_sigma = 9.0;
  long ri_cmd_samples = 0;
  ri_cmd->add_option("--n", ri_orders, "comma list of orders")->required();
  ri_cmd->add_option("--sigma", ri_sigma, "sampling scale bound");
  ri_cmd->add_option("--samples", ri_cmd_samples, "Monte Carlo samples")->required();

  // let --out/--format/--seed appear after the subcommand name as well
  for (auto* sub : {eval_cmd, conf_cmd, sweep_cmd, gen_cmd, ri_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  IndexOptions opt;
  if (sigma_opt > 0.0) opt.sigma = sigma_opt;
  opt.ri_table_path = ri_table_path;
  opt.ri_samples = ri_samples;
  opt.seed = seed;
  opt.i4_epsilon = i4_epsilon;
  opt.i5_tol = i5_tol;

  try {
    if (*eval_cmd) return run_eval(eval_matrix, eval_indices, opt, eval_tol, format, out_path);
    if (*conf_cmd) {
      cfg.seed = seed;
      cfg.seed_counterexamples = !no_seeding;
      // the sampling scale doubles as ni's bound, so draws stay in its domain
      IndexOptions conf_opt = opt;
      conf_opt.sigma = cfg.sigma;
      return run_conformance(conf_indices, conf_axioms, conf_opt, cfg, format, out_path);
    }
    if (*sweep_cmd) {
      return run_sweep(sweep_kind, sweep_matrix, sweep_index, opt, sweep_p, sweep_q, sweep_min,
                       sweep_max, sweep_points, sweep_scale == "log", out_path);
    }
    if (*gen_cmd) return run_gen(gen_kind, gen_n, gen_sigma, seed, out_path);
    if (*ri_cmd) return run_ri(ri_orders, ri_sigma, ri_cmd_samples, seed, out_path);
  } catch (const pcm::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == pcm::Errc::missing_random_index ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
