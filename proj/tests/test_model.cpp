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

#include "rankmc/model.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "rankmc/errors.hpp"

using namespace rankmc;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<int>(values.size()));
  int i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("win_probability basic values") {
  CHECK(win_probability(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(win_probability(3.0, 1.0) == doctest::Approx(0.75));
  CHECK(win_probability(1.0, 3.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(win_probability(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(win_probability(1.0, -2.0), DomainError);
}

TEST_CASE("win_probability complements and monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.05, 5.0);
  for (int k = 0; k < 100; ++k) {
    const double a = unif(rng);
    const double b = unif(rng);
    CHECK(win_probability(a, b) + win_probability(b, a) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(win_probability(a + 0.1, b) > win_probability(a, b));
    CHECK(win_probability(a, b + 0.1) < win_probability(a, b));
  }
}

TEST_CASE("preference vector validation and r_max") {
  PreferenceVector w(vec({1.0, 0.5, 0.25}));
  CHECK(w.r_max() == doctest::Approx(4.0));
  CHECK_THROWS_AS(PreferenceVector(vec({1.0, 0.0})), DomainError);
  PreferenceVector scaled(vec({2.0, 1.0}));
  scaled.normalize_max();
  CHECK(scaled.scores[0] == doctest::Approx(1.0));
  CHECK(scaled.scores[1] == doctest::Approx(0.5));
}

TEST_CASE("edge set rejects self pairs and stays symmetric") {
  EdgeSet e(4);
  e.add(0, 2);
  e.add(2, 1);
  CHECK(e.contains(0, 2));
  CHECK(e.contains(2, 0));
  CHECK_FALSE(e.contains(0, 1));
  CHECK(e.degree(2) == 2);
  CHECK_THROWS_AS(e.add(1, 1), DomainError);
  CHECK_FALSE(e.every_item_covered());
  e.add(3, 0);
  CHECK(e.every_item_covered());
}

TEST_CASE("erdos-renyi certainty cases") {
  const StreamSeeder seeder(11);
  const EdgeSet full = sample_erdos_renyi(5, 1.0, seeder);
  CHECK(full.num_edges() == 10);
  const EdgeSet empty = sample_erdos_renyi(5, 0.0, seeder);
  CHECK(empty.num_edges() == 0);
  CHECK_THROWS_AS(sample_erdos_renyi(5, 1.5, seeder), DomainError);
}

TEST_CASE("erdos-renyi edge count concentrates") {
  // 19900 candidate pairs at p = 0.3: mean 5970, sigma ~64.6.
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const EdgeSet e = sample_erdos_renyi(200, 0.3, StreamSeeder(seed));
    CHECK(std::abs(e.num_edges() - 5970.0) < 3.0 * 64.65);
  }
}

TEST_CASE("erdos-renyi is traversal-order independent") {
  const StreamSeeder seeder(99);
  const EdgeSet a = sample_erdos_renyi(30, 0.4, seeder);
  const EdgeSet b = sample_erdos_renyi(30, 0.4, seeder);
  CHECK(a.pairs() == b.pairs());
}

TEST_CASE("simulate_btl single comparison is 0 or 1") {
  PreferenceVector w(vec({1.0, 1.0}));
  EdgeSet e(2);
  e.add(0, 1);
  const auto [y, counts] = simulate_btl(w, e, 1, StreamSeeder(5));
  CHECK((y.y(0, 1) == 0.0 || y.y(0, 1) == 1.0));
  CHECK(counts.counts(0, 1) == 1);
  CHECK(counts.counts(1, 0) == 1);
  CHECK(counts.counts(0, 0) == 0);
}

TEST_CASE("simulate_btl concentrates at the model probability") {
  EdgeSet e(2);
  e.add(0, 1);
  {
    PreferenceVector w(vec({1.0, 1.0}));
    const auto [y, counts] = simulate_btl(w, e, 100000, StreamSeeder(17));
    CHECK(y.y(0, 1) == doctest::Approx(0.5).epsilon(0.02));
  }
  {
    PreferenceVector w(vec({3.0, 1.0}));
    const auto [y, counts] = simulate_btl(w, e, 100000, StreamSeeder(17));
    CHECK(y.y(0, 1) == doctest::Approx(0.75).epsilon(0.0134));
  }
}

TEST_CASE("simulate_btl complement identity is bit-exact") {
  std::mt19937_64 meta(3);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 6;
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    Eigen::VectorXd scores(n);
    for (int i = 0; i < n; ++i) scores[i] = unif(meta);
    const PreferenceVector w{scores};
    const EdgeSet e = sample_erdos_renyi(n, 0.8, StreamSeeder(meta()));
    const auto [y, counts] = simulate_btl(w, e, 7, StreamSeeder(meta()));
    for (const auto& [a, b] : e.pairs()) {
      CHECK(y.y(a, b) + y.y(b, a) == 1.0);  // exact, not approximate
    }
  }
}

TEST_CASE("simulate_btl relabeling with permuted streams permutes output") {
  const int n = 5;
  PreferenceVector w(vec({1.0, 0.7, 0.5, 0.3, 0.2}));
  EdgeSet e(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.add(i, j);
  const StreamSeeder seeder(23);
  const auto [y_base, c_base] = simulate_btl(w, e, 50, seeder);

  const std::vector<int> perm = {3, 0, 4, 1, 2};  // item i -> perm[i]
  Eigen::VectorXd permuted(n);
  for (int i = 0; i < n; ++i) permuted[perm[i]] = w.scores[i];
  // Permutation-aware draw assignment: a relabeled pair reuses the original
  // pair's uniforms, reflected when the canonical orientation flipped.
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
  const auto [y_perm, c_perm] = simulate_btl(
      PreferenceVector{permuted}, e, 50, [&](int a, int b, int l) {
        const int i = inverse[a];
        const int j = inverse[b];
        auto g = seeder.pair_stream(i, j);
        std::vector<double> draws(l);
        const bool flipped = i > j;
        for (double& u : draws) {
          const double x = uniform01(g);
          u = flipped ? 1.0 - x : x;
        }
        return draws;
      });
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      CHECK(y_perm.y(perm[i], perm[j]) ==
            doctest::Approx(y_base.y(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("simulate_btl validates inputs") {
  PreferenceVector w(vec({1.0, 1.0}));
  EdgeSet e(3);
  e.add(0, 1);
  CHECK_THROWS_AS(simulate_btl(w, e, 5, StreamSeeder(1)), DomainError);
  PreferenceVector w3(vec({1.0, 1.0, 1.0}));
  CHECK_THROWS_AS(simulate_btl(w3, e, 0, StreamSeeder(1)), DomainError);
}

TEST_SUITE_END();
