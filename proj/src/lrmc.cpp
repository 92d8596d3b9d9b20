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

#include "rankmc/lrmc.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rankmc/errors.hpp"

namespace rankmc {
namespace {

constexpr double kInitTol = 1e-12;

}  // namespace

int iteration_budget(int n, double delta_w_min) {
  if (n < 2) throw DomainError("iteration_budget needs n >= 2");
  if (!(delta_w_min > 0.0) || !(delta_w_min < n / 2.0)) {
    throw DomainError("delta_w_min must lie in (0, n/2)");
  }
  const double t = 4.0 * std::log(n / (2.0 * delta_w_min)) / std::log(16.0);
  const long rounded = std::lround(t);
  return rounded < 1 ? 1 : static_cast<int>(rounded);
}

FactorVector ls_update_v(const RatioMatrix& m, const EdgeSet& e,
                         const FactorVector& u, const FactorVector* previous,
                         int* degenerate) {
  const int n = e.n();
  FactorVector v;
  v.role = FactorRole::kV;
  v.values = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    double num = 0.0;
    double den = 0.0;
    for (int i : e.neighbors(s)) {
      num += m.m(i, s) * u.values[i];
      den += u.values[i] * u.values[i];
    }
    if (den == 0.0) {
      if (previous == nullptr) {
        throw SolverError("column " + std::to_string(s) +
                          " has no usable observations");
      }
      v.values[s] = previous->values[s];
      if (degenerate != nullptr) ++*degenerate;
    } else {
      v.values[s] = num / den;
    }
  }
  return v;
}

FactorVector ls_update_u(const RatioMatrix& m, const EdgeSet& e,
                         const FactorVector& v, const FactorVector* previous,
                         int* degenerate) {
  const int n = e.n();
  FactorVector u;
  u.role = FactorRole::kU;
  u.values = Eigen::VectorXd::Zero(n);
  for (int q = 0; q < n; ++q) {
    double num = 0.0;
    double den = 0.0;
    for (int j : e.neighbors(q)) {
      num += m.m(q, j) * v.values[j];
      den += v.values[j] * v.values[j];
    }
    if (den == 0.0) {
      if (previous == nullptr) {
        throw SolverError("row " + std::to_string(q) +
                          " has no usable observations");
      }
      u.values[q] = previous->values[q];
      if (degenerate != nullptr) ++*degenerate;
    } else {
      u.values[q] = num / den;
    }
  }
  return u;
}

double observed_objective(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& u, const FactorVector& v) {
  double sum = 0.0;
  for (const auto& [a, b] : e.pairs()) {
    const double rab = u.values[a] * v.values[b] - m.m(a, b);
    const double rba = u.values[b] * v.values[a] - m.m(b, a);
    sum += rab * rab + rba * rba;
  }
  return sum;
}

RankingResult rank_lrmc(const ObservationMatrix& y, const EdgeSet& e,
                        const LrmcConfig& cfg) {
  if (!e.every_item_covered()) {
    throw DomainError("every item needs at least one observed comparison");
  }
  const int n = e.n();
  const RatioMatrix m = build_ratio_matrix(y, e);
  const int budget = iteration_budget(n, cfg.delta_w_min);

  const InitResult init = init_factor(m, cfg.p_obs, cfg.r_max, /*c_r=*/1.0,
                                      InitMode::kNoiseless, kInitTol);

  RankingResult result;
  result.diagnostics.rmax_used = cfg.r_max;
  result.diagnostics.init_degenerate = init.degenerate;
  result.diagnostics.init_sign_flipped = init.sign_flipped;
  result.diagnostics.objective_trace.reserve(2 * budget);

  FactorVector u = init.u;
  FactorVector v{Eigen::VectorXd::Zero(n), FactorRole::kV};
  int degenerate = 0;
  for (int t = 1; t <= budget; ++t) {
    v = ls_update_v(m, e, u, &v, &degenerate);
    result.diagnostics.objective_trace.push_back(
        observed_objective(m, e, u, v));
    u = ls_update_u(m, e, v, &u, &degenerate);
    result.diagnostics.objective_trace.push_back(
        observed_objective(m, e, u, v));
  }
  result.diagnostics.iterations = budget;
  result.diagnostics.degenerate_columns = degenerate;
  result.diagnostics.final_residual =
      result.diagnostics.objective_trace.back();

  const double max_u = u.values.maxCoeff();
  if (!(max_u > 0.0)) {
    throw SolverError("final factor has no positive entries", budget);
  }
  result.scores = u.values / max_u;
  result.order = order_of_scores(result.scores);
  return result;
}

}  // namespace rankmc
