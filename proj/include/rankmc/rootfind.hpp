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

#ifndef RANKMC_ROOTFIND_HPP_
#define RANKMC_ROOTFIND_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace rankmc {

enum class RootFinder { kBisection, kBrent };

// Step budget for a bracket of width <= 1 and target resolution delta_z.
inline int bisection_step_cap(double delta_z) {
  return static_cast<int>(std::ceil(std::log2(1.0 / delta_z))) + 2;
}

struct RootResult {
  double root = 0.0;
  int steps = 0;
};

// Root of a monotone g on [lo, hi] given a sign change g(lo) <= 0 <= g(hi)
// (or the reverse). Halves the bracket for at most `cap` steps, then picks
// the secant point of the final bracket; for the smooth rational functions
// solved here that last interpolation is accurate far below the bracket
// width at no extra evaluations.
template <typename G>
RootResult bisect_root(const G& g, double lo, double hi, double g_lo,
                       double g_hi, int cap) {
  RootResult r;
  if (g_lo == 0.0) {
    r.root = lo;
    return r;
  }
  if (g_hi == 0.0) {
    r.root = hi;
    return r;
  }
  const bool rising = g_hi > 0.0;
  for (int step = 0; step < cap; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    ++r.steps;
    if (g_mid == 0.0) {
      r.root = mid;
      return r;
    }
    if ((g_mid > 0.0) == rising) {
      hi = mid;
      g_hi = g_mid;
    } else {
      lo = mid;
      g_lo = g_mid;
    }
  }
  const double denom = g_hi - g_lo;
  r.root = denom != 0.0 ? lo - g_lo * (hi - lo) / denom : 0.5 * (lo + hi);
  return r;
}

// Brent's method (inverse quadratic / secant with bisection fallback) under
// the same bracket contract and step cap as bisect_root.
template <typename G>
RootResult brent_root(const G& g, double a, double b, double fa, double fb,
                      int cap) {
  RootResult r;
  if (fa == 0.0) {
    r.root = a;
    return r;
  }
  if (fb == 0.0) {
    r.root = b;
    return r;
  }
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a, e = d;
  for (int step = 0; step < cap; ++step) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * 1e-16 * std::abs(b);
    const double m = 0.5 * (c - b);
    if (fb == 0.0 || std::abs(m) <= tol) break;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m;
      e = m;
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double rr = fb / fc;
        p = s * (2.0 * m * qq * (qq - rr) - (b - a) * (rr - 1.0));
        q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = g(b);
    ++r.steps;
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  r.root = b;
  return r;
}

template <typename G>
RootResult monotone_root(RootFinder method, const G& g, double lo, double hi,
                         double g_lo, double g_hi, int cap) {
  return method == RootFinder::kBrent ? brent_root(g, lo, hi, g_lo, g_hi, cap)
                                      : bisect_root(g, lo, hi, g_lo, g_hi, cap);
}

}  // namespace rankmc

#endif  // RANKMC_ROOTFIND_HPP_
