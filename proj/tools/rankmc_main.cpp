// Copyright 2026 The RankMC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rankmc/baselines.hpp"
#include "rankmc/errors.hpp"
#include "rankmc/harness.hpp"
#include "rankmc/ingest.hpp"
#include "rankmc/lrmc.hpp"
#include "rankmc/mcmle.hpp"
#include "rankmc/metrics.hpp"
#include "rankmc/ratio.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSolver = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rankmc::DomainError("cannot write to '" + path + "'");
  out << content;
}

rankmc::PointScheme parse_scheme(const std::string& text) {
  if (text == "football") return rankmc::football_scheme();
  if (text == "weather") return rankmc::weather_scheme();
  if (text.rfind("custom:", 0) == 0) {
    rankmc::PointScheme s;
    char extra;
    if (std::sscanf(text.c_str() + 7, "%lf,%lf,%lf%c", &s.win_points,
                    &s.tie_points_each, &s.loser_points, &extra) != 3) {
      throw CLI::ValidationError(
          "scheme", "custom scheme must be custom:win,tie,lose");
    }
    return s;
  }
  throw CLI::ValidationError(
      "scheme", "unknown scheme '" + text + "' (football|weather|custom:...)");
}

rankmc::DateWindow parse_window(const std::string& start,
                                const std::string& end) {
  rankmc::DateWindow w;
  if (!start.empty()) w.start = rankmc::parse_date(start);
  if (!end.empty()) w.end = rankmc::parse_date(end);
  return w;
}

struct RankOptions {
  std::string matches_path;
  std::string scheme = "football";
  std::string window_start;
  std::string window_end;
  std::string algo = "mcmle";
  double rmax = 0.0;  // 0 = estimate
  double cr = 0.0;    // 0 = schedule default
  double delta_w_min = 1e-6;
  std::string out_path;
};

// Shared by `rank` and `stability`: aggregate then solve on a chosen edge
// subset.
rankmc::RankingResult solve_aggregate(const rankmc::AggregateResult& agg,
                                      const rankmc::EdgeSet& edges,
                                      const RankOptions& opt) {
  const int n = edges.n();
  int total_l = 0;
  for (const auto& [a, b] : edges.pairs()) {
    total_l += agg.counts.counts(a, b);
  }
  const int mean_l =
      edges.num_edges() > 0
          ? std::max(1, total_l / std::max(1, edges.num_edges()))
          : 1;
  const double p_hat =
      2.0 * edges.num_edges() / (double(n) * double(n - 1));
  const double c_r =
      opt.cr > 0.0 ? opt.cr : rankmc::select_cr(p_hat, mean_l);

  if (opt.algo == "mcmle") {
    rankmc::McmleConfig cfg;
    if (opt.rmax > 0.0) cfg.r_max = opt.rmax;
    cfg.c_r = c_r;
    cfg.delta_w_min = opt.delta_w_min;
    cfg.delta = rankmc::inner_delta(opt.delta_w_min, n);
    cfg.p_obs = p_hat;
    return rankmc::rank_mcmle(agg.y, edges, agg.counts, cfg);
  }
  if (opt.algo == "lrmc") {
    const double rmax_hat =
        opt.rmax > 0.0
            ? opt.rmax
            : rankmc::estimate_rmax(agg.y, edges, opt.delta_w_min).r_max_hat;
    const rankmc::ObservationMatrix y_pos =
        rankmc::truncate_observations(agg.y, edges, rmax_hat, c_r);
    rankmc::LrmcConfig cfg;
    cfg.r_max = rmax_hat;
    cfg.delta_w_min = opt.delta_w_min;
    cfg.p_obs = p_hat;
    rankmc::RankingResult result = rankmc::rank_lrmc(y_pos, edges, cfg);
    result.diagnostics.rmax_estimated = opt.rmax <= 0.0;
    return result;
  }
  if (opt.algo == "rank-centrality") {
    const rankmc::StationaryScores pi = rankmc::rank_centrality(agg.y, edges);
    rankmc::RankingResult result;
    result.scores = pi.pi;
    result.order = pi.order;
    result.diagnostics.iterations = pi.iterations;
    return result;
  }
  throw CLI::ValidationError(
      "algo", "unknown algorithm '" + opt.algo +
                  "' (mcmle|lrmc|rank-centrality)");
}

int run_simulate(const rankmc::ScanConfig& cfg, const std::string& out_path,
                 bool no_timing) {
  const rankmc::ScanResult result = rankmc::run_scan(cfg);
  if (result.pobs_bound.vacuous) {
    std::cerr << "note: recovery bound on p_obs is " << result.pobs_bound.value
              << " (> 1, vacuous at this size)\n";
  }
  const std::string csv = rankmc::scan_to_csv(result, !no_timing);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  return kExitOk;
}

int run_rank(const RankOptions& opt, std::uint64_t seed) {
  const auto records = rankmc::load_matches_csv(opt.matches_path);
  const auto window = parse_window(opt.window_start, opt.window_end);
  const auto agg = rankmc::aggregate_matches(records, parse_scheme(opt.scheme),
                                             window);
  for (const std::string& warning : agg.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  const rankmc::RankingResult result = solve_aggregate(agg, agg.edges, opt);
  const rankmc::RankingDocument doc =
      rankmc::make_ranking_document(opt.algo, result, agg.names, seed);
  const std::string text = rankmc::ranking_to_json(doc);
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    write_file(opt.out_path, text);
  }
  return kExitOk;
}

int run_estimate_rmax(const RankOptions& opt) {
  const auto records = rankmc::load_matches_csv(opt.matches_path);
  const auto window = parse_window(opt.window_start, opt.window_end);
  const auto agg = rankmc::aggregate_matches(records, parse_scheme(opt.scheme),
                                             window);
  const rankmc::RmaxEstimate est =
      rankmc::estimate_rmax(agg.y, agg.edges, opt.delta_w_min);
  const json j = {{"rmax_hat", est.r_max_hat},
                  {"min_row_mean", est.e_hat},
                  {"clamped", est.clamped}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_score_predictions(const std::string& path_a, const std::string& path_b,
                          const std::string& matches_path) {
  std::ifstream in_a(path_a), in_b(path_b);
  if (!in_a) throw rankmc::DomainError("cannot open '" + path_a + "'");
  if (!in_b) throw rankmc::DomainError("cannot open '" + path_b + "'");
  std::ostringstream buf_a, buf_b;
  buf_a << in_a.rdbuf();
  buf_b << in_b.rdbuf();
  const auto doc_a = rankmc::ranking_from_json(buf_a.str());
  const auto doc_b = rankmc::ranking_from_json(buf_b.str());
  const auto records = rankmc::load_matches_csv(matches_path);

  // Both rankings must cover every participant; positions are taken
  // against a shared name universe from ranking A's order.
  std::vector<int> rank_a(doc_a.item_names.size());
  std::iota(rank_a.begin(), rank_a.end(), 0);
  std::vector<int> rank_b;
  {
    std::map<std::string, int> index_a;
    for (std::size_t i = 0; i < doc_a.item_names.size(); ++i) {
      index_a[doc_a.item_names[i]] = static_cast<int>(i);
    }
    for (const std::string& name : doc_b.item_names) {
      const auto it = index_a.find(name);
      if (it == index_a.end()) {
        throw rankmc::DomainError("rankings cover different item sets ('" +
                                  name + "' only in one)");
      }
      rank_b.push_back(it->second);
    }
    if (rank_b.size() != rank_a.size()) {
      throw rankmc::DomainError("rankings cover different item sets");
    }
  }
  const auto matches = rankmc::resolve_matches(records, doc_a.item_names);
  const auto [score_a, score_b] =
      rankmc::prediction_score(rank_a, rank_b, matches);
  const json j = {{"ranking_a", doc_a.algorithm},
                  {"ranking_b", doc_b.algorithm},
                  {"score_a", score_a},
                  {"score_b", score_b},
                  {"matches", matches.size()}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_stability(const RankOptions& opt, double p_obs, int iterations,
                  std::uint64_t seed) {
  const auto records = rankmc::load_matches_csv(opt.matches_path);
  const auto window = parse_window(opt.window_start, opt.window_end);
  const auto agg = rankmc::aggregate_matches(records, parse_scheme(opt.scheme),
                                             window);
  const rankmc::RankingResult baseline = solve_aggregate(agg, agg.edges, opt);

  const rankmc::StreamSeeder master(seed);
  std::vector<double> rmse_per_iteration;
  std::vector<double> displacements;
  int failures = 0;
  for (int it = 0; it < iterations; ++it) {
    try {
      const rankmc::EdgeSet kept =
          rankmc::obscure_edges(agg.edges, p_obs, master.derive(it + 1));
      const rankmc::RankingResult run = solve_aggregate(agg, kept, opt);
      rmse_per_iteration.push_back(
          rankmc::rank_rmse(run.order, baseline.order));
      for (int d : rankmc::rank_displacements(run.order, baseline.order)) {
        displacements.push_back(double(d));
      }
    } catch (const std::exception& err) {
      ++failures;
      std::cerr << "warning: iteration " << it << " failed: " << err.what()
                << "\n";
    }
  }
  if (rmse_per_iteration.empty()) {
    throw rankmc::SolverError("every stability iteration failed");
  }
  const double mean_rmse =
      std::accumulate(rmse_per_iteration.begin(), rmse_per_iteration.end(),
                      0.0) /
      double(rmse_per_iteration.size());
  const json j = {
      {"p_obs", p_obs},
      {"iterations", iterations},
      {"failures", failures},
      {"rank_rmse_mean", mean_rmse},
      {"rank_rmse_q95",
       rankmc::rank_error_quantile(rmse_per_iteration, 0.95)},
      {"item_error_q95", rankmc::rank_error_quantile(displacements, 0.95)},
  };
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preference ranking from pairwise comparisons via rank-1 "
               "matrix completion"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Run a seeded Monte-Carlo scan and emit a CSV table");
  rankmc::ScanConfig scan;
  std::string scan_axis = "L";
  std::vector<double> scan_values;
  std::vector<std::string> algo_names = {"mcmle", "lrmc"};
  std::string scan_out;
  bool exact = false;
  bool no_timing = false;
  simulate->add_option("--n", scan.n_items, "Number of items");
  simulate->add_option("--rmax", scan.r_max, "True max/min score ratio");
  simulate->add_option("--pobs", scan.p_obs, "Pair observation probability");
  simulate->add_option("--L", scan.l, "Comparisons per observed pair");
  simulate->add_option("--trials", scan.trials, "Monte-Carlo trials per point");
  simulate->add_option("--seed", scan.seed, "Master seed");
  simulate->add_option("--scan-axis", scan_axis, "One of L|pobs|rmax|n");
  simulate->add_option("--values", scan_values, "Scanned axis values")
      ->delimiter(',');
  simulate->add_option("--algos", algo_names,
                       "Algorithms: mcmle,lrmc,rank-centrality")
      ->delimiter(',');
  simulate->add_option("--out", scan_out, "CSV output path (default stdout)");
  simulate->add_option("--delta-w-min", scan.delta_w_min, "Score resolution");
  simulate->add_option("--cr", scan.c_r_override,
                       "Truncation constant override (0 = schedule)");
  simulate->add_flag("--estimate-rmax", scan.estimate_r_max,
                     "Estimate r_max from each trial's observations");
  simulate->add_flag("--exact", exact,
                     "Exact win probabilities (no comparison noise)");
  simulate->add_flag("--no-timing", no_timing,
                     "Omit the mean_seconds column for byte-stable output");
  simulate->add_option("--threads", scan.threads, "Worker threads (0 = auto)");

  // shared match-data options
  RankOptions rank_opt;
  std::uint64_t seed = 0;
  auto add_data_options = [&](CLI::App* cmd, bool with_algo) {
    cmd->add_option("--matches", rank_opt.matches_path, "Matches CSV path")
        ->required();
    cmd->add_option("--scheme", rank_opt.scheme,
                    "football|weather|custom:win,tie,lose");
    cmd->add_option("--window-start", rank_opt.window_start,
                    "Inclusive ISO date");
    cmd->add_option("--window-end", rank_opt.window_end, "Exclusive ISO date");
    cmd->add_option("--delta-w-min", rank_opt.delta_w_min,
                    "Score resolution");
    if (with_algo) {
      cmd->add_option("--algo", rank_opt.algo,
                      "mcmle|lrmc|rank-centrality");
      cmd->add_option("--rmax", rank_opt.rmax,
                      "Max/min score ratio (0 = estimate from data)");
      cmd->add_option("--cr", rank_opt.cr,
                      "Truncation constant (0 = schedule default)");
    }
  };

  auto* rank = app.add_subcommand(
      "rank", "Rank items from a match log and emit ranking JSON");
  add_data_options(rank, true);
  rank->add_option("--out", rank_opt.out_path, "JSON output path");
  rank->add_option("--seed", seed, "Seed recorded in diagnostics");

  auto* est = app.add_subcommand(
      "estimate-rmax", "Estimate the max/min score ratio from a match log");
  add_data_options(est, false);

  auto* score = app.add_subcommand(
      "score-predictions",
      "Score two ranking JSON files against a list of matches");
  std::string ranking_a, ranking_b, score_matches;
  score->add_option("--ranking-a", ranking_a, "First ranking JSON")
      ->required();
  score->add_option("--ranking-b", ranking_b, "Second ranking JSON")
      ->required();
  score->add_option("--matches", score_matches, "Matches CSV path")
      ->required();

  auto* stability = app.add_subcommand(
      "stability",
      "Measure ranking stability under repeated edge obscuring");
  add_data_options(stability, true);
  double stability_pobs = 0.5;
  int stability_iterations = 30;
  stability->add_option("--pobs", stability_pobs, "Edge keep probability");
  stability->add_option("--iterations", stability_iterations,
                        "Obscure-and-rank repetitions");
  stability->add_option("--seed", seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      if (scan_axis == "L") scan.axis = rankmc::ScanAxis::kL;
      else if (scan_axis == "pobs") scan.axis = rankmc::ScanAxis::kPObs;
      else if (scan_axis == "rmax") scan.axis = rankmc::ScanAxis::kRMax;
      else if (scan_axis == "n") scan.axis = rankmc::ScanAxis::kN;
      else {
        std::cerr << "error: unknown scan axis '" << scan_axis << "'\n";
        return kExitUsage;
      }
      if (scan_values.empty()) {
        // Single-point scan at the fixed-axis value.
        switch (scan.axis) {
          case rankmc::ScanAxis::kL: scan_values = {double(scan.l)}; break;
          case rankmc::ScanAxis::kPObs: scan_values = {scan.p_obs}; break;
          case rankmc::ScanAxis::kRMax: scan_values = {scan.r_max}; break;
          case rankmc::ScanAxis::kN:
            scan_values = {double(scan.n_items)};
            break;
        }
      }
      scan.axis_values = scan_values;
      scan.exact_probabilities = exact;
      scan.algorithms.clear();
      for (const std::string& name : algo_names) {
        if (name == "mcmle") scan.algorithms.push_back(
            rankmc::Algorithm::kMcmle);
        else if (name == "lrmc") scan.algorithms.push_back(
            rankmc::Algorithm::kLrmc);
        else if (name == "rank-centrality") scan.algorithms.push_back(
            rankmc::Algorithm::kRankCentrality);
        else {
          std::cerr << "error: unknown algorithm '" << name << "'\n";
          return kExitUsage;
        }
      }
      return run_simulate(scan, scan_out, no_timing);
    }
    if (rank->parsed()) return run_rank(rank_opt, seed);
    if (est->parsed()) return run_estimate_rmax(rank_opt);
    if (score->parsed()) {
      return run_score_predictions(ranking_a, ranking_b, score_matches);
    }
    if (stability->parsed()) {
      return run_stability(rank_opt, stability_pobs, stability_iterations,
                           seed);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rankmc::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const rankmc::DomainError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
