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

#include "rankmc/baselines.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rankmc/errors.hpp"
#include "rankmc/metrics.hpp"

namespace rankmc {
namespace {

constexpr double kStationaryTol = 1e-12;
constexpr int kMaxChainIterations = 1000000;

// Connected components by breadth-first search; component id per item.
std::vector<int> components(const EdgeSet& e) {
  const int n = e.n();
  std::vector<int> comp(n, -1);
  int id = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> frontier;
    frontier.push(s);
    comp[s] = id;
    while (!frontier.empty()) {
      const int i = frontier.front();
      frontier.pop();
      for (int j : e.neighbors(i)) {
        if (comp[j] == -1) {
          comp[j] = id;
          frontier.push(j);
        }
      }
    }
    ++id;
  }
  return comp;
}

}  // namespace

StationaryScores rank_centrality(const ObservationMatrix& y,
                                 const EdgeSet& e) {
  const int n = e.n();
  if (y.n() != n) throw DomainError("observation/edge size mismatch");
  if (!e.every_item_covered()) {
    throw DomainError("every item needs at least one observed comparison");
  }
  const std::vector<int> comp = components(e);
  int num_components = 0;
  for (int c : comp) num_components = std::max(num_components, c + 1);
  if (num_components > 1) {
    std::string parts;
    for (int c = 0; c < num_components; ++c) {
      parts += c == 0 ? "{" : " {";
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (comp[i] == c) {
          parts += (first ? "" : ",") + std::to_string(i);
          first = false;
        }
      }
      parts += "}";
    }
    throw DomainError("comparison graph is disconnected: components " + parts);
  }

  const double d_max = e.max_degree();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [a, b] : e.pairs()) {
    p(a, b) = y.y(b, a) / d_max;
    p(b, a) = y.y(a, b) / d_max;
  }
  for (int i = 0; i < n; ++i) {
    p(i, i) = 1.0 - p.row(i).sum();
  }

  StationaryScores out;
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int it = 0; it < kMaxChainIterations; ++it) {
    Eigen::VectorXd next = p.transpose() * pi;
    next /= next.sum();
    const double diff = (next - pi).cwiseAbs().sum();
    pi = std::move(next);
    out.iterations = it + 1;
    if (diff < kStationaryTol) break;
  }
  out.pi = std::move(pi);
  out.order = order_of_scores(out.pi);
  return out;
}

}  // namespace rankmc
