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

#ifndef RANKMC_RATIO_HPP_
#define RANKMC_RATIO_HPP_

#include <Eigen/Dense>

#include "rankmc/model.hpp"

namespace rankmc {

// Win-odds ratio matrix: m[i][j] estimates w_i / w_j on observed pairs,
// diagonal fixed at 1, zero elsewhere. The diagonal counts as observed;
// off-diagonal observability is the edge set's.
struct RatioMatrix {
  Eigen::MatrixXd m;

  int n() const { return static_cast<int>(m.rows()); }
};

// Smallest win fraction kept after truncation: 1 / (1 + c_r * r_max_hat).
double truncation_floor(double r_max_hat, double c_r);

// Raises every observed win fraction to at least the truncation floor.
// Applied per entry, so y[i][j] + y[j][i] = 1 may no longer hold afterwards.
ObservationMatrix truncate_observations(const ObservationMatrix& y,
                                        const EdgeSet& e, double r_max_hat,
                                        double c_r);

// m[i][j] = 1 / y[j][i] - 1 on edges, m[i][i] = 1. Observed entries must be
// strictly positive (truncate first when zeros are possible).
RatioMatrix build_ratio_matrix(const ObservationMatrix& y_trunc,
                               const EdgeSet& e);

// Expected win fraction of the weakest item against an opponent drawn
// uniformly from [z, 1]: z/(1-z) * ln((1+z)/(2z)), extended by its limit
// value 1/2 at z = 1. Strictly increasing on (0, 1].
double expected_win_fraction(double z);

struct RmaxEstimate {
  double r_max_hat = 1.0;
  double e_hat = 0.0;      // minimal mean observed row win fraction
  bool clamped = false;    // e_hat fell outside the closed form's range
};

// Estimates the max/min preference ratio from the observation matrix: take
// the lowest mean row win fraction, invert the closed form above by
// bisection to tolerance delta_z, and return 1/Z_0.
RmaxEstimate estimate_rmax(const ObservationMatrix& y, const EdgeSet& e,
                           double delta_z);

}  // namespace rankmc

#endif  // RANKMC_RATIO_HPP_
