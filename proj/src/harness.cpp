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

#include "rankmc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "rankmc/baselines.hpp"
#include "rankmc/errors.hpp"
#include "rankmc/lrmc.hpp"
#include "rankmc/mcmle.hpp"
#include "rankmc/metrics.hpp"
#include "rankmc/ratio.hpp"

namespace rankmc {

PreferenceVector randomize_preferences(int n_t, double r_max,
                                       std::mt19937_64& rng,
                                       bool literal_scaling) {
  if (n_t < 2) throw DomainError("randomize_preferences needs n_t >= 2");
  if (!(r_max >= 1.0)) throw DomainError("r_max must be >= 1");
  const double lo = 1.0 / r_max;
  Eigen::VectorXd scores(n_t);
  scores[0] = 1.0;
  scores[1] = lo;
  const int rest = n_t - 2;
  if (rest > 0) {
    Eigen::VectorXd u(rest);
    for (int i = 0; i < rest; ++i) u[i] = uniform01(rng);
    const double span = u.maxCoeff() - u.minCoeff();
    for (int i = 0; i < rest; ++i) {
      // The pinned entries supply the extremes; the free entries map
      // uniformly into the open interval, which keeps scores tie-free
      // almost surely. Dividing by the sample span instead (the literal
      // variant) can push scores past the ceiling of 1.
      const double mapped =
          literal_scaling ? (span > 0.0 ? u[i] / span : u[i]) : u[i];
      scores[2 + i] = lo + (1.0 - lo) * mapped;
    }
  }
  return PreferenceVector(scores);
}

double select_cr(double p_obs, int l) {
  if (!(p_obs >= 0.0) || !(p_obs <= 1.0) || l < 1) {
    throw DomainError("select_cr needs p_obs in [0,1] and l >= 1");
  }
  if (p_obs <= 0.2) return 1.2;
  return l >= 10 ? 1.4 : 1.8;
}

double inner_delta(double delta_w_min, int n_t) {
  if (!(delta_w_min > 0.0) || n_t < 1) {
    throw DomainError("inner_delta needs positive inputs");
  }
  return delta_w_min / (20.0 * n_t);
}

PObsBound min_pobs_bound(double gamma, double r_max, int n,
                         double delta_w_min, double delta2) {
  if (!(delta2 > 0.0) || delta2 > 1.0 / 12.0) {
    throw DomainError("delta2 must lie in (0, 1/12]");
  }
  if (n < 2 || !(r_max >= 1.0) || !(delta_w_min > 0.0)) {
    throw DomainError("min_pobs_bound needs n >= 2, r_max >= 1, positive "
                      "delta_w_min");
  }
  PObsBound b;
  b.value = (8.0 / 3.0) * (gamma + 1.0) * r_max * r_max *
            (std::log(double(n)) / n) * std::log(n / (2.0 * delta_w_min)) /
            (delta2 * delta2);
  b.vacuous = b.value > 1.0;
  return b;
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kMcmle: return "mcmle";
    case Algorithm::kLrmc: return "lrmc";
    case Algorithm::kRankCentrality: return "rank-centrality";
  }
  return "unknown";
}

std::string axis_name(ScanAxis a) {
  switch (a) {
    case ScanAxis::kL: return "L";
    case ScanAxis::kPObs: return "p_obs";
    case ScanAxis::kRMax: return "r_max";
    case ScanAxis::kN: return "n";
  }
  return "unknown";
}

namespace {

struct TrialOutcome {
  bool failed = false;
  double rmse = 0.0;
  bool misordered = false;
  double seconds = 0.0;
  std::vector<int> displacements;
};

struct GridPoint {
  int n = 0;
  double r_max = 1.0;
  double p_obs = 1.0;
  int l = 1;
};

GridPoint grid_point(const ScanConfig& cfg, double axis_value) {
  GridPoint g{cfg.n_items, cfg.r_max, cfg.p_obs, cfg.l};
  switch (cfg.axis) {
    case ScanAxis::kL: g.l = static_cast<int>(axis_value); break;
    case ScanAxis::kPObs: g.p_obs = axis_value; break;
    case ScanAxis::kRMax: g.r_max = axis_value; break;
    case ScanAxis::kN: g.n = static_cast<int>(axis_value); break;
  }
  return g;
}

TrialOutcome run_trial(const ScanConfig& cfg, const GridPoint& g,
                       Algorithm algo, std::uint64_t axis_index, int trial) {
  TrialOutcome out;
  const StreamSeeder trial_seeder =
      StreamSeeder(cfg.seed).derive((axis_index << 32) | std::uint64_t(trial));
  auto omega_rng = trial_seeder.stream(0x01);
  const PreferenceVector omega =
      randomize_preferences(g.n, g.r_max, omega_rng);
  const std::vector<int> true_order = order_of_scores(omega.scores);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const EdgeSet edges =
        sample_erdos_renyi(g.n, g.p_obs, trial_seeder.derive(0x02));
    ObservationMatrix y;
    ComparisonCounts counts;
    if (cfg.exact_probabilities) {
      std::tie(y, counts) = exact_observations(omega, edges);
    } else {
      std::tie(y, counts) =
          simulate_btl(omega, edges, g.l, trial_seeder.derive(0x03));
    }

    const double c_r = cfg.c_r_override > 0.0
                           ? cfg.c_r_override
                           : (cfg.exact_probabilities
                                  ? 1000.0
                                  : select_cr(g.p_obs, g.l));

    RankingResult result;
    switch (algo) {
      case Algorithm::kMcmle: {
        McmleConfig mc;
        if (!cfg.estimate_r_max) mc.r_max = g.r_max;
        mc.c_r = c_r;
        mc.delta_w_min = cfg.delta_w_min;
        mc.delta = inner_delta(cfg.delta_w_min, g.n);
        mc.force_consistency = !cfg.exact_probabilities;
        mc.p_obs = g.p_obs;
        result = rank_mcmle(y, edges, counts, mc);
        break;
      }
      case Algorithm::kLrmc: {
        // The plain least-squares path divides by raw win fractions, so
        // zero observations must be floored first.
        const ObservationMatrix y_pos =
            cfg.exact_probabilities
                ? y
                : truncate_observations(y, edges, g.r_max, c_r);
        LrmcConfig lc;
        lc.r_max = g.r_max;
        lc.delta_w_min = cfg.delta_w_min;
        lc.p_obs = g.p_obs;
        result = rank_lrmc(y_pos, edges, lc);
        break;
      }
      case Algorithm::kRankCentrality: {
        const StationaryScores pi = rank_centrality(y, edges);
        result.scores = pi.pi;
        result.order = pi.order;
        break;
      }
    }
    out.rmse = rank_rmse(result.order, true_order);
    out.misordered = result.order != true_order;
    out.displacements = rank_displacements(result.order, true_order);
  } catch (const std::exception&) {
    out.failed = true;
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

ScanResult run_scan(const ScanConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("trials must be >= 1");
  if (cfg.axis_values.empty()) throw DomainError("scanned axis is empty");
  if (cfg.algorithms.empty()) throw DomainError("no algorithms selected");

  ScanResult result;
  result.pobs_bound = min_pobs_bound(1.0, cfg.r_max, cfg.n_items,
                                     cfg.delta_w_min, 1.0 / 12.0);

  struct Task {
    std::size_t cell = 0;
    int trial = 0;
    GridPoint point;
    Algorithm algo = Algorithm::kMcmle;
    std::uint64_t axis_index = 0;
  };
  std::vector<Task> tasks;
  for (std::size_t ai = 0; ai < cfg.axis_values.size(); ++ai) {
    const GridPoint g = grid_point(cfg, cfg.axis_values[ai]);
    for (Algorithm algo : cfg.algorithms) {
      ScanCell cell;
      cell.axis = axis_name(cfg.axis);
      cell.axis_value = cfg.axis_values[ai];
      cell.algorithm = algo;
      cell.trial_rmse.assign(cfg.trials,
                             std::numeric_limits<double>::quiet_NaN());
      const std::size_t cell_index = result.cells.size();
      result.cells.push_back(std::move(cell));
      for (int trial = 0; trial < cfg.trials; ++trial) {
        tasks.push_back(Task{cell_index, trial, g, algo, ai});
      }
    }
  }

  std::vector<TrialOutcome> outcomes(tasks.size());
  const unsigned hw = std::thread::hardware_concurrency();
  const int threads =
      cfg.threads > 0 ? cfg.threads : static_cast<int>(hw > 0 ? hw : 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) break;
      const Task& task = tasks[k];
      outcomes[k] =
          run_trial(cfg, task.point, task.algo, task.axis_index, task.trial);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Deterministic aggregation in task order.
  std::vector<std::vector<const TrialOutcome*>> per_cell(result.cells.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    per_cell[tasks[k].cell].push_back(&outcomes[k]);
    result.cells[tasks[k].cell].trial_rmse[tasks[k].trial] =
        outcomes[k].failed ? std::numeric_limits<double>::quiet_NaN()
                           : outcomes[k].rmse;
  }
  for (std::size_t c = 0; c < result.cells.size(); ++c) {
    ScanCell& cell = result.cells[c];
    double rmse_sum = 0.0;
    double seconds_sum = 0.0;
    int misorders = 0;
    int successes = 0;
    std::vector<double> displacements;
    for (const TrialOutcome* o : per_cell[c]) {
      seconds_sum += o->seconds;
      if (o->failed) {
        ++cell.failures;
        continue;
      }
      ++successes;
      rmse_sum += o->rmse;
      misorders += o->misordered ? 1 : 0;
      for (int d : o->displacements) displacements.push_back(double(d));
    }
    cell.mean_seconds = seconds_sum / double(per_cell[c].size());
    if (successes > 0) {
      cell.mean_rank_rmse = rmse_sum / successes;
      cell.p_misorder = double(misorders) / successes;
      cell.q95_error = rank_error_quantile(displacements, 0.95);
    }
  }
  return result;
}

std::string scan_to_csv(const ScanResult& result, bool include_timing) {
  std::string csv = "axis_name,axis_value,algorithm,mean_rank_rmse,"
                    "p_misorder,q95_error,failures";
  if (include_timing) csv += ",mean_seconds";
  csv += '\n';
  char line[256];
  for (const ScanCell& cell : result.cells) {
    std::snprintf(line, sizeof(line), "%s,%.10g,%s,%.10g,%.10g,%.10g,%d",
                  cell.axis.c_str(), cell.axis_value,
                  algorithm_name(cell.algorithm).c_str(), cell.mean_rank_rmse,
                  cell.p_misorder, cell.q95_error, cell.failures);
    csv += line;
    if (include_timing) {
      std::snprintf(line, sizeof(line), ",%.6f", cell.mean_seconds);
      csv += line;
    }
    csv += '\n';
  }
  return csv;
}

}  // namespace rankmc
