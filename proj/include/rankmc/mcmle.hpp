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

#ifndef RANKMC_MCMLE_HPP_
#define RANKMC_MCMLE_HPP_

#include <optional>

#include "rankmc/lrmc.hpp"
#include "rankmc/metrics.hpp"
#include "rankmc/ratio.hpp"
#include "rankmc/rootfind.hpp"
#include "rankmc/spectral.hpp"

namespace rankmc {

struct McmleConfig {
  // Largest-to-smallest score ratio; estimated from the observations when
  // absent.
  std::optional<double> r_max;
  double c_r = 1.4;           // truncation relaxation constant, >= 1
  double delta_w_min = 1e-6;  // score resolution; also the inner root
                              // tolerance passed to the factor solvers
  // Frobenius convergence threshold on successive reconstructions;
  // <= 0 selects delta_w_min / (20 * n).
  double delta = 0.0;
  bool force_consistency = true;  // off for the exact-observation regime
  double p_obs = 1.0;
  RootFinder root_finder = RootFinder::kBisection;
};

// Per-row comparison-count weights w[q][j] = counts(q,j) / max_j counts(q,j)
// over observed pairs; every covered row has maximum weight 1.
struct WeightMatrix {
  Eigen::MatrixXd w;
};

WeightMatrix compute_weights(const ComparisonCounts& counts, const EdgeSet& e);

// Per-item maximum-likelihood update of the inverse-score factor given the
// score factor: solves the stationarity condition
//   (1/n) sum_j w_qj / (1 + u_j / z) = (1/n) sum_j w_qj / (1 + m(j,q))
// for z = 1/v_q on (0, 1] by monotone root-finding; returns v_q = 1 when
// the data side exceeds the attainable maximum at z = 1.
FactorVector factor_mle_v(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& u_prev, double delta_z,
                          const ComparisonCounts& counts,
                          RootFinder method = RootFinder::kBisection);

// Score-factor counterpart: solves
//   (1/n) sum_i w_iq / (1 + z * v_i) = (1/n) sum_i w_iq / (1 + m(q,i))
// for z = u_q on (0, 1]; the left side is decreasing with minimum at z = 1,
// so u_q = 1 whenever the data side is at or below that minimum.
FactorVector factor_mle_u(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& v_curr, double delta_z,
                          const ComparisonCounts& counts,
                          RootFinder method = RootFinder::kBisection);

// Projects the pair onto the consistent manifold u_q * v_q = 1 through
// r_q = (u_q + 1/v_q) / 2; afterwards v is the exact elementwise
// reciprocal of u.
std::pair<FactorVector, FactorVector> force_consistency(const FactorVector& u,
                                                        const FactorVector& v);

// Floors u at 1/(c_r*r_max) and caps v at c_r*r_max.
std::pair<FactorVector, FactorVector> truncate_factors(FactorVector u,
                                                       FactorVector v,
                                                       double r_max,
                                                       double c_r);

// Noisy-regime ranking: truncated ratio matrix, spectral initialization,
// then alternating per-item maximum-likelihood factor updates with
// truncation and optional consistency forcing until the reconstruction
// stabilizes or the iteration budget runs out.
RankingResult rank_mcmle(const ObservationMatrix& y, const EdgeSet& e,
                         const ComparisonCounts& counts,
                         const McmleConfig& cfg);

}  // namespace rankmc

#endif  // RANKMC_MCMLE_HPP_
