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

#include "rankmc/spectral.hpp"

#include <cmath>

#include "rankmc/errors.hpp"

namespace rankmc {
namespace {

constexpr int kMaxPowerIterations = 100000;

}  // namespace

TopSingularVector top_singular_vector(const RatioMatrix& m, double p_obs,
                                      double tol) {
  if (!(p_obs > 0.0) || p_obs > 1.0) {
    throw DomainError("p_obs must lie in (0, 1]");
  }
  if (m.m.cwiseAbs().maxCoeff() == 0.0) {
    throw DomainError("ratio matrix is identically zero");
  }
  const Eigen::MatrixXd b = m.m / p_obs;
  const int n = m.n();

  TopSingularVector out;
  out.degenerate = (b.cwiseAbs().sum() == b.diagonal().cwiseAbs().sum());

  Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  for (int it = 0; it < kMaxPowerIterations; ++it) {
    Eigen::VectorXd next = b * (b.transpose() * u);
    const double norm = next.norm();
    if (norm == 0.0) {
      // Start vector orthogonal to the range; perturb deterministically.
      u[it % n] += 1.0;
      u.normalize();
      continue;
    }
    next /= norm;
    const double alignment = std::abs(next.dot(u));
    u = next;
    out.iterations = it + 1;
    if (1.0 - alignment <= tol) {
      out.vec = u;
      return out;
    }
  }
  out.degenerate = true;
  out.vec = u;
  return out;
}

int vec_sign(const FactorVector& u) {
  double total = 0.0;
  for (int i = 0; i < u.n(); ++i) {
    if (u.values[i] > 0.0) total += 1.0;
    else if (u.values[i] < 0.0) total -= 1.0;
  }
  return total >= 0.0 ? 1 : -1;
}

Eigen::VectorXd clip_large_entries(Eigen::VectorXd v, double r_max) {
  const double threshold = 2.0 * r_max;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > threshold) v[i] = 0.0;
  }
  return v;
}

Eigen::VectorXd floor_entries(Eigen::VectorXd v, double floor) {
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] < floor) v[i] = floor;
  }
  return v;
}

InitResult init_factor(const RatioMatrix& m, double p_obs, double r_max,
                       double c_r, InitMode mode, double tol) {
  if (!(r_max >= 1.0)) throw DomainError("r_max must be >= 1");
  if (!(c_r >= 1.0)) throw DomainError("c_r must be >= 1");

  const TopSingularVector top = top_singular_vector(m, p_obs, tol);
  InitResult res;
  res.power_iterations = top.iterations;
  res.degenerate = top.degenerate;

  Eigen::VectorXd u = clip_large_entries(top.vec, r_max);

  // The noiseless algorithm leaves the sign alone, but an all-negative
  // singular vector would survive clipping untouched, so the sign fix is
  // applied in both modes; the V update absorbs the flip either way.
  FactorVector tagged{u, FactorRole::kU};
  const int sign = vec_sign(tagged);
  if (sign < 0) {
    u = -u;
    res.sign_flipped = true;
  }

  if (mode == InitMode::kNoisy) {
    // The floor is an omega-scale bound (scores have maximum 1), while a
    // unit-norm singular vector lives at the 1/sqrt(n) scale; at larger n
    // every entry would fall below the floor and the initialization would
    // flatten to uniform. Rescaling to maximum 1 before flooring keeps the
    // bound meaningful; the final normalization restores unit norm.
    const double top = u.maxCoeff();
    if (top > 0.0) u /= top;
    u = floor_entries(std::move(u), 1.0 / (c_r * r_max));
  }

  if (u.cwiseAbs().maxCoeff() == 0.0) {
    u = Eigen::VectorXd::Ones(m.n());
    res.uniform_fallback = true;
    res.degenerate = true;
  }
  u.normalize();
  res.u = FactorVector{std::move(u), FactorRole::kU};
  return res;
}

}  // namespace rankmc
