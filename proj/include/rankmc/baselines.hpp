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

#ifndef RANKMC_BASELINES_HPP_
#define RANKMC_BASELINES_HPP_

#include <Eigen/Dense>
#include <vector>

#include "rankmc/model.hpp"

namespace rankmc {

// Stationary distribution of the comparison Markov chain; sums to 1.
struct StationaryScores {
  Eigen::VectorXd pi;
  std::vector<int> order;  // descending pi, ties by ascending index
  int iterations = 0;
};

// Rank Centrality: random walk that moves from i to j with probability
// y[j][i] / d_max on edges and stays put otherwise; scores are the walk's
// stationary distribution. Requires a connected comparison graph.
StationaryScores rank_centrality(const ObservationMatrix& y, const EdgeSet& e);

}  // namespace rankmc

#endif  // RANKMC_BASELINES_HPP_
