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

#ifndef RANKMC_HARNESS_HPP_
#define RANKMC_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rankmc/model.hpp"
#include "rankmc/rng.hpp"

namespace rankmc {

// Preference scores with the extremes pinned to r_max^-1 and 1 and the
// remaining entries drawn uniformly and mapped into [r_max^-1, 1].
// `literal_scaling` reproduces the unmapped division by (max-min), which
// can push scores above 1; kept only for comparison runs.
PreferenceVector randomize_preferences(int n_t, double r_max,
                                       std::mt19937_64& rng,
                                       bool literal_scaling = false);

// Truncation relaxation constant schedule used by the simulations.
double select_cr(double p_obs, int l);

// Frobenius convergence threshold: delta_w_min / (20 * n_t).
double inner_delta(double delta_w_min, int n_t);

struct PObsBound {
  double value = 0.0;
  bool vacuous = false;  // bound exceeds 1, certainly satisfied
};

// Sampling-probability bound sufficient for exact recovery:
// (8/3)(gamma+1) r_max^2 (ln n / n) ln(n/(2 delta_w_min)) delta2^-2.
PObsBound min_pobs_bound(double gamma, double r_max, int n,
                         double delta_w_min, double delta2);

enum class Algorithm { kMcmle, kLrmc, kRankCentrality };

std::string algorithm_name(Algorithm a);

enum class ScanAxis { kL, kPObs, kRMax, kN };

std::string axis_name(ScanAxis a);

struct ScanConfig {
  ScanAxis axis = ScanAxis::kL;
  std::vector<double> axis_values;

  // Fixed-axis values (the scanned one is overridden per grid point).
  int n_items = 50;
  double r_max = 8.0;
  double p_obs = 0.5;
  int l = 10;

  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms = {Algorithm::kMcmle, Algorithm::kLrmc};

  double delta_w_min = 1e-6;
  // Estimate r_max from each trial's observations instead of passing the
  // true value (least-squares ranking always receives the true value).
  bool estimate_r_max = false;
  // Exact-probability observations (the infinite-comparison limit); turns
  // consistency forcing off and effectively disables truncation.
  bool exact_probabilities = false;
  double c_r_override = 0.0;  // > 0 replaces the schedule
  int threads = 0;            // 0 selects hardware concurrency
};

struct ScanCell {
  std::string axis;
  double axis_value = 0.0;
  Algorithm algorithm = Algorithm::kMcmle;
  double mean_rank_rmse = 0.0;
  double p_misorder = 0.0;
  double q95_error = 0.0;
  int failures = 0;
  double mean_seconds = 0.0;
  // Per-trial rank RMSE (successful trials; NaN for failures), kept for
  // paired statistical comparisons across algorithms.
  std::vector<double> trial_rmse;
};

struct ScanResult {
  std::vector<ScanCell> cells;
  PObsBound pobs_bound;  // evaluated at gamma=1, delta2=1/12 for the config
};

ScanResult run_scan(const ScanConfig& cfg);

// Flat CSV with header axis_name,axis_value,algorithm,mean_rank_rmse,
// p_misorder,q95_error,failures,mean_seconds. Statistical columns are
// deterministic for a fixed config and seed; mean_seconds is measured
// wall time and is excluded from that contract (suppressed when
// include_timing is false).
std::string scan_to_csv(const ScanResult& result, bool include_timing = true);

}  // namespace rankmc

#endif  // RANKMC_HARNESS_HPP_
