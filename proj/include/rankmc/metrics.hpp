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

#ifndef RANKMC_METRICS_HPP_
#define RANKMC_METRICS_HPP_

#include <Eigen/Dense>
#include <vector>

namespace rankmc {

struct SolveDiagnostics {
  int iterations = 0;
  double final_residual = 0.0;
  double rmax_used = 0.0;
  bool rmax_estimated = false;
  bool init_degenerate = false;
  bool init_sign_flipped = false;
  int degenerate_columns = 0;
  // Observed-entry Frobenius objective after every half-step (least-squares
  // solver only).
  std::vector<double> objective_trace;
};

// Solver output: max-normalized scores plus the induced ordering
// (descending score, ties broken by ascending item index).
struct RankingResult {
  Eigen::VectorXd scores;
  std::vector<int> order;
  SolveDiagnostics diagnostics;
};

// Descending-score ordering with ties broken by ascending index.
std::vector<int> order_of_scores(const Eigen::VectorXd& scores);

// positions[item] = rank position of `item` in `order`.
std::vector<int> positions_of_order(const std::vector<int>& order);

// Root mean square difference between the two permutations' positions.
double rank_rmse(const std::vector<int>& estimated_order,
                 const std::vector<int>& reference_order);

// Per-item |position shift| between two orderings.
std::vector<int> rank_displacements(const std::vector<int>& estimated_order,
                                    const std::vector<int>& reference_order);

// Empirical q-quantile, nearest-rank definition.
double rank_error_quantile(const std::vector<double>& errors, double q);

enum class MatchOutcome { kFirstWins, kSecondWins, kTie };

struct Match {
  int first = 0;
  int second = 0;
  MatchOutcome outcome = MatchOutcome::kFirstWins;
};

// Head-to-head prediction points for two rankings over a match list:
// a decisive match pays 1 to each ranking that put the winner above the
// loser; a tie pays 0.5 to the ranking placing the pair strictly closer,
// or 0.5 to both at equal distance.
std::pair<double, double> prediction_score(const std::vector<int>& rank_a,
                                           const std::vector<int>& rank_b,
                                           const std::vector<Match>& matches);

}  // namespace rankmc

#endif  // RANKMC_METRICS_HPP_
