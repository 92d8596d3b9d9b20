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

#ifndef RANKMC_SPECTRAL_HPP_
#define RANKMC_SPECTRAL_HPP_

#include <Eigen/Dense>

#include "rankmc/ratio.hpp"

namespace rankmc {

enum class FactorRole { kU, kV };

// One bilinear factor: U entries estimate scores, V entries estimate
// inverse scores.
struct FactorVector {
  Eigen::VectorXd values;
  FactorRole role = FactorRole::kU;

  int n() const { return static_cast<int>(values.size()); }
};

enum class InitMode { kNoiseless, kNoisy };

struct TopSingularVector {
  Eigen::VectorXd vec;  // unit norm, sign unspecified
  int iterations = 0;
  bool degenerate = false;  // no off-diagonal observations, or no convergence
};

// Dominant left singular vector of the rescaled observed ratio matrix,
// by power iteration on its Gram operator from a deterministic all-ones
// start. Stops when the angle between successive iterates drops below tol.
TopSingularVector top_singular_vector(const RatioMatrix& m, double p_obs,
                                      double tol);

// +1 when the entry signs sum to >= 0, otherwise -1.
int vec_sign(const FactorVector& u);

// Pipeline steps, exposed so each rule is testable in isolation.
Eigen::VectorXd clip_large_entries(Eigen::VectorXd v, double r_max);
Eigen::VectorXd floor_entries(Eigen::VectorXd v, double floor);

struct InitResult {
  FactorVector u;
  int power_iterations = 0;
  bool degenerate = false;
  bool sign_flipped = false;
  bool uniform_fallback = false;
};

// Initial score factor: top singular vector, entries larger than 2*r_max
// zeroed, sign fixed, and (noisy mode) entries floored at 1/(c_r*r_max)
// before the final normalization to unit Euclidean norm. An all-zero
// vector after clipping falls back to the uniform direction.
InitResult init_factor(const RatioMatrix& m, double p_obs, double r_max,
                       double c_r, InitMode mode, double tol);

}  // namespace rankmc

#endif  // RANKMC_SPECTRAL_HPP_
