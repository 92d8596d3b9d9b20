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

#ifndef RANKMC_LRMC_HPP_
#define RANKMC_LRMC_HPP_

#include "rankmc/metrics.hpp"
#include "rankmc/ratio.hpp"
#include "rankmc/spectral.hpp"

namespace rankmc {

struct LrmcConfig {
  double r_max = 1.0;         // largest-to-smallest score ratio bound
  double delta_w_min = 1e-6;  // target score resolution
  double p_obs = 1.0;         // sampling probability used for init rescaling
};

// Alternating-minimization budget: round(4 * ln(n / (2*delta)) / ln 16),
// never below one iteration.
int iteration_budget(int n, double delta_w_min);

// Per-column least-squares update: for each column s,
// v_s = sum over observed rows i of m(i,s)*u_i / sum of u_i^2.
// A column whose denominator vanishes keeps its previous value;
// `degenerate` counts such columns when non-null.
FactorVector ls_update_v(const RatioMatrix& m, const EdgeSet& e,
                         const FactorVector& u,
                         const FactorVector* previous = nullptr,
                         int* degenerate = nullptr);

// Row counterpart: u_q = sum over observed columns j of m(q,j)*v_j / sum
// of v_j^2.
FactorVector ls_update_u(const RatioMatrix& m, const EdgeSet& e,
                         const FactorVector& v,
                         const FactorVector* previous = nullptr,
                         int* degenerate = nullptr);

// Frobenius objective over the observed off-diagonal entries,
// sum over edges (both orientations) of (u_i*v_j - m(i,j))^2.
double observed_objective(const RatioMatrix& m, const EdgeSet& e,
                          const FactorVector& u, const FactorVector& v);

// Rank-1 completion of the noiseless ratio matrix by alternating
// least squares; observations must be strictly positive on edges.
RankingResult rank_lrmc(const ObservationMatrix& y, const EdgeSet& e,
                        const LrmcConfig& cfg);

}  // namespace rankmc

#endif  // RANKMC_LRMC_HPP_
