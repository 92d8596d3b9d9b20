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

#include "rankmc/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankmc/errors.hpp"
#include "rankmc/rootfind.hpp"

namespace rankmc {
namespace {

// The closed form's range is (0, 1/2); finite samples can land outside it.
constexpr double kEhatClampLow = 1e-6;
constexpr double kEhatClampHigh = 0.5 - 1e-9;

}  // namespace

double truncation_floor(double r_max_hat, double c_r) {
  if (!(r_max_hat >= 1.0)) throw DomainError("r_max_hat must be >= 1");
  if (!(c_r >= 1.0)) throw DomainError("c_r must be >= 1");
  return 1.0 / (1.0 + c_r * r_max_hat);
}

ObservationMatrix truncate_observations(const ObservationMatrix& y,
                                        const EdgeSet& e, double r_max_hat,
                                        double c_r) {
  if (y.n() != e.n()) throw DomainError("observation/edge size mismatch");
  const double floor = truncation_floor(r_max_hat, c_r);
  ObservationMatrix out = y;
  for (const auto& [a, b] : e.pairs()) {
    if (out.y(a, b) < floor) out.y(a, b) = floor;
    if (out.y(b, a) < floor) out.y(b, a) = floor;
  }
  return out;
}

RatioMatrix build_ratio_matrix(const ObservationMatrix& y_trunc,
                               const EdgeSet& e) {
  if (y_trunc.n() != e.n()) throw DomainError("observation/edge size mismatch");
  const int n = e.n();
  RatioMatrix r;
  r.m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [a, b] : e.pairs()) {
    if (!(y_trunc.y(a, b) > 0.0) || !(y_trunc.y(b, a) > 0.0)) {
      throw DomainError("observed win fraction is zero for pair (" +
                        std::to_string(a) + "," + std::to_string(b) +
                        "); truncate observations first");
    }
    r.m(a, b) = 1.0 / y_trunc.y(b, a) - 1.0;
    r.m(b, a) = 1.0 / y_trunc.y(a, b) - 1.0;
  }
  r.m.diagonal().setOnes();
  return r;
}

double expected_win_fraction(double z) {
  if (!(z > 0.0) || z > 1.0) {
    throw DomainError("expected_win_fraction needs z in (0, 1]");
  }
  if (z == 1.0) return 0.5;  // analytic limit, avoids 0/0
  return z / (1.0 - z) * std::log((1.0 + z) / (2.0 * z));
}

RmaxEstimate estimate_rmax(const ObservationMatrix& y, const EdgeSet& e,
                           double delta_z) {
  if (y.n() != e.n()) throw DomainError("observation/edge size mismatch");
  if (!(delta_z > 0.0)) throw DomainError("delta_z must be positive");
  const int n = e.n();

  RmaxEstimate est;
  double e_hat = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& nbrs = e.neighbors(i);
    if (nbrs.empty()) {
      throw DomainError("item " + std::to_string(i) +
                        " has no observed comparisons");
    }
    double sum = 0.0;
    for (int j : nbrs) sum += y.y(i, j);
    e_hat = std::min(e_hat, sum / static_cast<double>(nbrs.size()));
  }
  est.e_hat = e_hat;

  if (e_hat >= 0.5) {
    // Weakest item wins at least half its games: equal-strength regime.
    est.r_max_hat = 1.0;
    est.clamped = true;
    return est;
  }
  double target = e_hat;
  if (target < kEhatClampLow) {
    target = kEhatClampLow;
    est.clamped = true;
  } else if (target > kEhatClampHigh) {
    target = kEhatClampHigh;
    est.clamped = true;
  }

  // Lower the bracket start until the sign condition holds; the function
  // decays to 0 at 0+, so a handful of halvings always suffice.
  double lo = kEhatClampLow;
  while (expected_win_fraction(lo) >= target) lo *= 0.5;

  const auto g = [target](double z) {
    return expected_win_fraction(z) - target;
  };
  const int cap = bisection_step_cap(delta_z);
  const RootResult root = bisect_root(g, lo, 1.0, g(lo), 0.5 - target, cap);
  est.r_max_hat = 1.0 / root.root;
  return est;
}

}  // namespace rankmc
