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

#include "rankmc/mcmle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rankmc/errors.hpp"

namespace rankmc {
namespace {

constexpr double kInitTol = 1e-12;

void require_positive(const FactorVector& f, const char* side) {
  for (int i = 0; i < f.n(); ++i) {
    if (!(f.values[i] > 0.0)) {
      throw DomainError(std::string(side) + " factor entry " +
                        std::to_string(i) + " is not strictly positive");
    }
  }
}

void require_covered(const EdgeSet& e) {
  for (int i = 0; i < e.n(); ++i) {
    if (e.neighbors(i).empty()) {
      throw DomainError("item " + std::to_string(i) +
                        " has no observed comparisons");
    }
  }
}

}  // namespace

WeightMatrix compute_weights(const ComparisonCounts& counts,
                             const EdgeSet& e) {
  const int n = e.n();
  WeightMatrix w;
  w.w = Eigen::MatrixXd::Zero(n, n);
  for (int q = 0; q < n; ++q) {
    int max_count = 0;
    for (int j : e.neighbors(q)) {
      max_count = std::max(max_count, counts.counts(q, j));
    }
    if (max_count == 0) continue;
    for (int j : e.neighbors(q)) {
      w.w(q, j) = static_cast<double>(counts.counts(q, j)) / max_count;
    }
  }
  return w;
}

FactorVector factor_mle_v(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& u_prev, double delta_z,
                          const ComparisonCounts& counts, RootFinder method) {
  require_covered(e);
  require_positive(u_prev, "score");
  if (!(delta_z > 0.0)) throw DomainError("delta_z must be positive");
  const int n = e.n();
  const WeightMatrix weights = compute_weights(counts, e);
  const int cap = bisection_step_cap(delta_z);

  FactorVector v;
  v.role = FactorRole::kV;
  v.values = Eigen::VectorXd::Zero(n);
  for (int q = 0; q < n; ++q) {
    const auto& nbrs = e.neighbors(q);
    double s = 0.0;       // data side of the stationarity condition
    double f_at_1 = 0.0;  // model side at z = 1, the attainable maximum
    for (int j : nbrs) {
      s += weights.w(q, j) / (1.0 + m.m(j, q));
      f_at_1 += weights.w(q, j) / (1.0 + u_prev.values[j]);
    }
    s /= n;
    f_at_1 /= n;
    if (s > f_at_1) {
      v.values[q] = 1.0;  // stronger than the scale admits
      continue;
    }
    // f(z) = (1/n) sum_j w_qj * z / (z + u_j), increasing from 0 to f(1).
    const auto f = [&](double z) {
      double acc = 0.0;
      for (int j : nbrs) {
        acc += weights.w(q, j) * z / (z + u_prev.values[j]);
      }
      return acc / n - s;
    };
    const RootResult root =
        monotone_root(method, f, 0.0, 1.0, -s, f_at_1 - s, cap);
    const double z0 = std::max(root.root, std::ldexp(1.0, -(cap + 4)));
    v.values[q] = 1.0 / z0;
  }
  return v;
}

FactorVector factor_mle_u(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& v_curr, double delta_z,
                          const ComparisonCounts& counts, RootFinder method) {
  require_covered(e);
  require_positive(v_curr, "inverse-score");
  if (!(delta_z > 0.0)) throw DomainError("delta_z must be positive");
  const int n = e.n();
  const WeightMatrix weights = compute_weights(counts, e);
  const int cap = bisection_step_cap(delta_z);

  FactorVector u;
  u.role = FactorRole::kU;
  u.values = Eigen::VectorXd::Zero(n);
  for (int q = 0; q < n; ++q) {
    const auto& nbrs = e.neighbors(q);
    double s = 0.0;
    double f_at_1 = 0.0;
    double f_at_0 = 0.0;
    for (int i : nbrs) {
      s += weights.w(q, i) / (1.0 + m.m(q, i));
      f_at_1 += weights.w(q, i) / (1.0 + v_curr.values[i]);
      f_at_0 += weights.w(q, i);
    }
    s /= n;
    f_at_1 /= n;
    f_at_0 /= n;
    if (s <= f_at_1) {
      u.values[q] = 1.0;  // even the top of the scale trails the data
      continue;
    }
    // f(z) = (1/n) sum_i w_iq / (1 + z*v_i), decreasing from f(0) to f(1).
    const auto f = [&](double z) {
      double acc = 0.0;
      for (int i : nbrs) {
        acc += weights.w(q, i) / (1.0 + z * v_curr.values[i]);
      }
      return acc / n - s;
    };
    const RootResult root =
        monotone_root(method, f, 0.0, 1.0, f_at_0 - s, f_at_1 - s, cap);
    u.values[q] = std::max(root.root, std::ldexp(1.0, -(cap + 4)));
  }
  return u;
}

std::pair<FactorVector, FactorVector> force_consistency(
    const FactorVector& u, const FactorVector& v) {
  if (u.n() != v.n()) throw DomainError("factor sizes differ");
  require_positive(v, "inverse-score");
  FactorVector u_out{Eigen::VectorXd(u.n()), FactorRole::kU};
  FactorVector v_out{Eigen::VectorXd(v.n()), FactorRole::kV};
  for (int q = 0; q < u.n(); ++q) {
    const double r = 0.5 * (u.values[q] + 1.0 / v.values[q]);
    u_out.values[q] = r;
    v_out.values[q] = 1.0 / r;
  }
  return {std::move(u_out), std::move(v_out)};
}

std::pair<FactorVector, FactorVector> truncate_factors(FactorVector u,
                                                       FactorVector v,
                                                       double r_max,
                                                       double c_r) {
  const double bound = c_r * r_max;
  for (int q = 0; q < u.n(); ++q) {
    if (u.values[q] < 1.0 / bound) u.values[q] = 1.0 / bound;
  }
  for (int q = 0; q < v.n(); ++q) {
    if (v.values[q] > bound) v.values[q] = bound;
  }
  return {std::move(u), std::move(v)};
}

RankingResult rank_mcmle(const ObservationMatrix& y, const EdgeSet& e,
                         const ComparisonCounts& counts,
                         const McmleConfig& cfg) {
  if (e.num_edges() == 0) throw DomainError("edge set is empty");
  require_covered(e);
  if (!(cfg.c_r >= 1.0)) throw DomainError("c_r must be >= 1");

  const int n = e.n();
  const double delta_z = cfg.delta_w_min;

  RankingResult result;
  double r_max_hat;
  if (cfg.r_max.has_value()) {
    r_max_hat = *cfg.r_max;
  } else {
    // Estimation must see the raw observations; truncation depends on it.
    r_max_hat = estimate_rmax(y, e, delta_z).r_max_hat;
    result.diagnostics.rmax_estimated = true;
  }
  result.diagnostics.rmax_used = r_max_hat;

  const ObservationMatrix y_trunc =
      truncate_observations(y, e, r_max_hat, cfg.c_r);
  const RatioMatrix m = build_ratio_matrix(y_trunc, e);
  const int budget = iteration_budget(n, cfg.delta_w_min);
  const double delta =
      cfg.delta > 0.0 ? cfg.delta : cfg.delta_w_min / (20.0 * n);

  const InitResult init = init_factor(m, cfg.p_obs, r_max_hat, cfg.c_r,
                                      InitMode::kNoisy, kInitTol);
  result.diagnostics.init_degenerate = init.degenerate;
  result.diagnostics.init_sign_flipped = init.sign_flipped;

  FactorVector u = init.u;
  Eigen::MatrixXd recon_prev = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd recon =
      u.values * u.values.cwiseInverse().transpose();

  int t = 1;
  double frob = (recon - recon_prev).norm();
  while (t <= budget && frob >= delta) {
    FactorVector v = factor_mle_v(m, e, u, delta_z, counts, cfg.root_finder);
    u = factor_mle_u(m, e, v, delta_z, counts, cfg.root_finder);
    // The truncation bounds assume the score factor tops out near 1; the
    // joint rescale is free (the reconstruction u*v' is invariant and
    // reciprocal pairs stay reciprocal) and stops the clamps from
    // flattening a factor pair that is merely scaled small.
    const double top = u.values.maxCoeff();
    if (top > 0.0) {
      u.values /= top;
      v.values *= top;
    }
    std::tie(u, v) = truncate_factors(std::move(u), std::move(v), r_max_hat,
                                      cfg.c_r);
    if (cfg.force_consistency) {
      std::tie(u, v) = force_consistency(u, v);
    }
    recon_prev = std::move(recon);
    recon = u.values * v.values.transpose();
    frob = (recon - recon_prev).norm();
    ++t;
  }
  result.diagnostics.iterations = t - 1;
  result.diagnostics.final_residual = frob;

  const double max_u = u.values.maxCoeff();
  if (!(max_u > 0.0)) {
    throw SolverError("final factor has no positive entries", t - 1);
  }
  result.scores = u.values / max_u;
  result.order = order_of_scores(result.scores);
  return result;
}

}  // namespace rankmc
