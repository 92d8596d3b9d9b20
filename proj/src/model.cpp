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

#include "rankmc/model.hpp"

#include <algorithm>
#include <string>

#include "rankmc/errors.hpp"

namespace rankmc {

PreferenceVector::PreferenceVector(Eigen::VectorXd s) : scores(std::move(s)) {
  if (scores.size() == 0) {
    throw DomainError("preference vector must be non-empty");
  }
  for (int i = 0; i < scores.size(); ++i) {
    if (!(scores[i] > 0.0)) {
      throw DomainError("preference score " + std::to_string(i) +
                        " is not strictly positive");
    }
  }
}

double PreferenceVector::r_max() const {
  return scores.maxCoeff() / scores.minCoeff();
}

void PreferenceVector::normalize_max() { scores /= scores.maxCoeff(); }

EdgeSet::EdgeSet(int n) : n_(n) {
  if (n < 2) throw DomainError("edge set needs at least 2 items");
  mask_.assign(static_cast<std::size_t>(n) * n, 0);
  adjacency_.resize(n);
}

void EdgeSet::add(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw DomainError("edge index out of range");
  }
  if (i == j) throw DomainError("self-pairs are not allowed");
  if (contains(i, j)) return;
  mask_[static_cast<std::size_t>(i) * n_ + j] = 1;
  mask_[static_cast<std::size_t>(j) * n_ + i] = 1;
  pairs_.emplace_back(std::min(i, j), std::max(i, j));
  adjacency_[i].push_back(j);
  adjacency_[j].push_back(i);
}

bool EdgeSet::contains(int i, int j) const {
  return mask_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

int EdgeSet::max_degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

bool EdgeSet::every_item_covered() const {
  for (int i = 0; i < n_; ++i) {
    if (adjacency_[i].empty()) return false;
  }
  return true;
}

double win_probability(double w_i, double w_j) {
  if (!(w_i > 0.0) || !(w_j > 0.0)) {
    throw DomainError("win_probability requires strictly positive weights");
  }
  return w_i / (w_i + w_j);
}

EdgeSet sample_erdos_renyi(int n, double p_obs, const StreamSeeder& seeder) {
  if (!(p_obs >= 0.0) || !(p_obs <= 1.0)) {
    throw DomainError("p_obs must lie in [0, 1]");
  }
  EdgeSet e(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto g = seeder.pair_stream(i, j);
      if (uniform01(g) < p_obs) e.add(i, j);
    }
  }
  return e;
}

std::pair<ObservationMatrix, ComparisonCounts> simulate_btl(
    const PreferenceVector& w, const EdgeSet& e, int l,
    const PairUniformsFn& pair_uniforms) {
  if (w.n() != e.n()) {
    throw DomainError("preference vector and edge set sizes differ");
  }
  if (l < 1) throw DomainError("number of comparisons must be >= 1");
  const int n = e.n();
  ObservationMatrix obs;
  obs.y = Eigen::MatrixXd::Zero(n, n);
  ComparisonCounts cc;
  cc.counts = Eigen::MatrixXi::Zero(n, n);

  for (const auto& [a, b] : e.pairs()) {
    const double p = win_probability(w.scores[a], w.scores[b]);
    const std::vector<double> draws = pair_uniforms(a, b, l);
    if (static_cast<int>(draws.size()) != l) {
      throw DomainError("pair draw source returned the wrong count");
    }
    int wins = 0;
    for (double u : draws) {
      if (u < p) ++wins;
    }
    const double frac = static_cast<double>(wins) / l;
    obs.y(a, b) = frac;
    obs.y(b, a) = 1.0 - frac;  // keeps the complement identity bit-exact
    cc.counts(a, b) = l;
    cc.counts(b, a) = l;
  }
  return {std::move(obs), std::move(cc)};
}

std::pair<ObservationMatrix, ComparisonCounts> simulate_btl(
    const PreferenceVector& w, const EdgeSet& e, int l,
    const StreamSeeder& seeder) {
  return simulate_btl(
      w, e, l, [&seeder](int i, int j, int count) {
        auto g = seeder.pair_stream(i, j);
        std::vector<double> draws(count);
        for (double& u : draws) u = uniform01(g);
        return draws;
      });
}

std::pair<ObservationMatrix, ComparisonCounts> exact_observations(
    const PreferenceVector& w, const EdgeSet& e) {
  if (w.n() != e.n()) {
    throw DomainError("preference vector and edge set sizes differ");
  }
  const int n = e.n();
  ObservationMatrix obs;
  obs.y = Eigen::MatrixXd::Zero(n, n);
  ComparisonCounts cc;
  cc.counts = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [a, b] : e.pairs()) {
    const double p = win_probability(w.scores[a], w.scores[b]);
    obs.y(a, b) = p;
    obs.y(b, a) = 1.0 - p;
    cc.counts(a, b) = 1;
    cc.counts(b, a) = 1;
  }
  return {std::move(obs), std::move(cc)};
}

}  // namespace rankmc
