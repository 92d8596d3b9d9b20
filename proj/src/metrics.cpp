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

#include "rankmc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "rankmc/errors.hpp"

namespace rankmc {

std::vector<int> order_of_scores(const Eigen::VectorXd& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&scores](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

std::vector<int> positions_of_order(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = int(k);
  return pos;
}

double rank_rmse(const std::vector<int>& estimated_order,
                 const std::vector<int>& reference_order) {
  if (estimated_order.size() != reference_order.size()) {
    throw DomainError("orderings have different lengths");
  }
  const auto est = positions_of_order(estimated_order);
  const auto ref = positions_of_order(reference_order);
  double sum = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double d = est[i] - ref[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(est.size()));
}

std::vector<int> rank_displacements(const std::vector<int>& estimated_order,
                                    const std::vector<int>& reference_order) {
  if (estimated_order.size() != reference_order.size()) {
    throw DomainError("orderings have different lengths");
  }
  const auto est = positions_of_order(estimated_order);
  const auto ref = positions_of_order(reference_order);
  std::vector<int> out(est.size());
  for (std::size_t i = 0; i < est.size(); ++i) {
    out[i] = std::abs(est[i] - ref[i]);
  }
  return out;
}

double rank_error_quantile(const std::vector<double>& errors, double q) {
  if (errors.empty()) throw DomainError("quantile of an empty collection");
  if (!(q > 0.0) || !(q < 1.0)) throw DomainError("quantile must be in (0,1)");
  std::vector<double> sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  std::size_t k = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(n)));
  if (k == 0) k = 1;
  if (k > n) k = n;
  return sorted[k - 1];
}

std::pair<double, double> prediction_score(const std::vector<int>& rank_a,
                                           const std::vector<int>& rank_b,
                                           const std::vector<Match>& matches) {
  const auto pos_a = positions_of_order(rank_a);
  const auto pos_b = positions_of_order(rank_b);
  const int n = static_cast<int>(rank_a.size());
  if (static_cast<int>(rank_b.size()) != n) {
    throw DomainError("rankings cover different item sets");
  }
  double score_a = 0.0;
  double score_b = 0.0;
  for (const Match& m : matches) {
    if (m.first < 0 || m.first >= n || m.second < 0 || m.second >= n) {
      throw DomainError("match references an unknown item");
    }
    if (m.outcome == MatchOutcome::kTie) {
      const int da = std::abs(pos_a[m.first] - pos_a[m.second]);
      const int db = std::abs(pos_b[m.first] - pos_b[m.second]);
      if (da < db) {
        score_a += 0.5;
      } else if (db < da) {
        score_b += 0.5;
      } else {
        score_a += 0.5;
        score_b += 0.5;
      }
      continue;
    }
    const int winner = m.outcome == MatchOutcome::kFirstWins ? m.first
                                                             : m.second;
    const int loser = m.outcome == MatchOutcome::kFirstWins ? m.second
                                                            : m.first;
    if (pos_a[winner] < pos_a[loser]) score_a += 1.0;
    if (pos_b[winner] < pos_b[loser]) score_b += 1.0;
  }
  return {score_a, score_b};
}

}  // namespace rankmc
