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

#ifndef RANKMC_MODEL_HPP_
#define RANKMC_MODEL_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rankmc/rng.hpp"

namespace rankmc {

// Latent preference intensities: strictly positive, conventionally
// normalized so the strongest item has score 1.
struct PreferenceVector {
  Eigen::VectorXd scores;

  PreferenceVector() = default;
  explicit PreferenceVector(Eigen::VectorXd s);

  int n() const { return static_cast<int>(scores.size()); }

  // max(scores) / min(scores), always >= 1.
  double r_max() const;

  // Rescales so the maximum score equals 1.
  void normalize_max();
};

// Undirected comparison graph over n items; self-pairs excluded,
// membership symmetric.
class EdgeSet {
 public:
  explicit EdgeSet(int n);

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(pairs_.size()); }

  void add(int i, int j);
  bool contains(int i, int j) const;
  int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
  int max_degree() const;

  // Canonical pairs, first index < second.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }

  bool every_item_covered() const;

 private:
  int n_;
  std::vector<std::uint8_t> mask_;  // n_*n_ symmetric adjacency indicator
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> adjacency_;
};

// Matches played per pair: symmetric, zero diagonal, positive exactly on
// the edge set.
struct ComparisonCounts {
  Eigen::MatrixXi counts;

  int n() const { return static_cast<int>(counts.rows()); }
};

// Empirical win fractions y[i][j] = k_ij / L_ij; y[i][j] + y[j][i] = 1 on
// every edge (the simulator produces this identity bit-exactly).
struct ObservationMatrix {
  Eigen::MatrixXd y;

  int n() const { return static_cast<int>(y.rows()); }
};

// P(i beats j) = w_i / (w_i + w_j).
double win_probability(double w_i, double w_j);

// Each unordered pair joins the edge set independently with probability
// p_obs; substreams are keyed per pair so the result is independent of
// traversal order.
EdgeSet sample_erdos_renyi(int n, double p_obs, const StreamSeeder& seeder);

// Uniform-draw source for simulate_btl, called once per canonical pair
// (a < b) with the comparison count; the default derives one substream per
// unordered pair. Tests use the hook to check relabeling equivariance.
using PairUniformsFn =
    std::function<std::vector<double>(int a, int b, int l)>;

// Draws L Bernoulli outcomes per edge under the Bradley-Terry-Luce model
// and records win fractions plus per-pair counts.
std::pair<ObservationMatrix, ComparisonCounts> simulate_btl(
    const PreferenceVector& w, const EdgeSet& e, int l,
    const StreamSeeder& seeder);
std::pair<ObservationMatrix, ComparisonCounts> simulate_btl(
    const PreferenceVector& w, const EdgeSet& e, int l,
    const PairUniformsFn& pair_uniforms);

// Exact-probability observations (the infinite-comparison limit):
// y[i][j] = w_i / (w_i + w_j) on edges, counts = 1 per edge.
std::pair<ObservationMatrix, ComparisonCounts> exact_observations(
    const PreferenceVector& w, const EdgeSet& e);

}  // namespace rankmc

#endif  // RANKMC_MODEL_HPP_
