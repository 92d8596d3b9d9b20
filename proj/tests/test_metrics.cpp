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

#include "rankmc/metrics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "rankmc/errors.hpp"

using namespace rankmc;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("order_of_scores breaks ties by ascending index") {
  Eigen::VectorXd s(4);
  s << 0.5, 1.0, 0.5, 0.2;
  CHECK(order_of_scores(s) == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("rank_rmse basics") {
  CHECK(rank_rmse({0, 1, 2}, {0, 1, 2}) == 0.0);
  CHECK(rank_rmse({1, 0, 2}, {0, 1, 2}) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(rank_rmse({1, 0}, {0, 1}) == doctest::Approx(1.0));
  CHECK(rank_rmse({0, 1}, {1, 0}) ==
        doctest::Approx(rank_rmse({1, 0}, {0, 1})));  // symmetric
  CHECK_THROWS_AS(rank_rmse({0, 1}, {0, 1, 2}), DomainError);
}

TEST_CASE("rank_error_quantile nearest-rank definition") {
  CHECK(rank_error_quantile({0.0, 0.0, 0.0}, 0.95) == 0.0);
  std::vector<double> grid(100);
  for (int i = 0; i < 100; ++i) grid[i] = i + 1;
  std::shuffle(grid.begin(), grid.end(), std::mt19937_64(3));
  CHECK(rank_error_quantile(grid, 0.95) == 95.0);
  CHECK(rank_error_quantile(grid, 0.5) == 50.0);
  CHECK_THROWS_AS(rank_error_quantile({}, 0.95), DomainError);
  CHECK_THROWS_AS(rank_error_quantile({1.0}, 1.0), DomainError);

  // Sort-based oracle on a seeded batch.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  std::vector<double> batch(137);
  for (double& x : batch) x = unif(rng);
  std::vector<double> sorted = batch;
  std::sort(sorted.begin(), sorted.end());
  CHECK(rank_error_quantile(batch, 0.95) ==
        sorted[static_cast<std::size_t>(std::ceil(0.95 * 137)) - 1]);
}

TEST_CASE("prediction_score covers all three rule branches") {
  // rank_a: A B C D, rank_b: B A C D (indices 0..3 = A..D).
  const std::vector<int> rank_a = {0, 1, 2, 3};
  const std::vector<int> rank_b = {1, 0, 2, 3};

  // Decisive, both rankings right.
  auto [a1, b1] = prediction_score(rank_a, rank_b,
                                   {{0, 2, MatchOutcome::kFirstWins}});
  CHECK(a1 == 1.0);
  CHECK(b1 == 1.0);
  // Decisive, one right.
  auto [a2, b2] = prediction_score(rank_a, rank_b,
                                   {{0, 1, MatchOutcome::kFirstWins}});
  CHECK(a2 == 1.0);
  CHECK(b2 == 0.0);
  // Tie, strictly closer distance takes the half point.
  auto [a3, b3] = prediction_score(rank_a, rank_b,
                                   {{0, 2, MatchOutcome::kTie}});
  CHECK(a3 == 0.0);  // |0-2| = 2 vs |1-2| = 1
  CHECK(b3 == 0.5);
  // Tie, equal distances split.
  auto [a4, b4] = prediction_score(rank_a, rank_b,
                                   {{0, 1, MatchOutcome::kTie}});
  CHECK(a4 == 0.5);
  CHECK(b4 == 0.5);

  CHECK_THROWS_AS(prediction_score(rank_a, rank_b,
                                   {{0, 9, MatchOutcome::kTie}}),
                  DomainError);
}

TEST_CASE("prediction totals over a 12-match fixture") {
  const std::vector<int> rank_a = {0, 1, 2, 3};  // A B C D
  const std::vector<int> rank_b = {1, 0, 2, 3};  // B A C D
  const std::vector<Match> matches = {
      {0, 2, MatchOutcome::kFirstWins},   // both right
      {0, 2, MatchOutcome::kSecondWins},  // both wrong
      {0, 1, MatchOutcome::kFirstWins},   // only a right
      {0, 1, MatchOutcome::kSecondWins},  // only b right
      {1, 2, MatchOutcome::kFirstWins},   // both right
      {3, 2, MatchOutcome::kFirstWins},   // both wrong
      {0, 1, MatchOutcome::kTie},         // equal distance: split
      {0, 2, MatchOutcome::kTie},         // b closer
      {1, 2, MatchOutcome::kTie},         // a closer
      {1, 3, MatchOutcome::kTie},         // a closer (2 vs 3)
      {0, 3, MatchOutcome::kFirstWins},   // both right
      {1, 3, MatchOutcome::kFirstWins},   // both right
  };
  const auto [score_a, score_b] = prediction_score(rank_a, rank_b, matches);
  CHECK(score_a == 6.5);
  CHECK(score_b == 6.0);
}

TEST_CASE("per-match point totals stay within the rule budget") {
  std::mt19937_64 rng(2025);
  const int n = 8;
  std::vector<int> rank_a(n);
  std::iota(rank_a.begin(), rank_a.end(), 0);
  std::vector<int> rank_b = rank_a;
  for (int rep = 0; rep < 100; ++rep) {
    std::shuffle(rank_a.begin(), rank_a.end(), rng);
    std::shuffle(rank_b.begin(), rank_b.end(), rng);
    std::uniform_int_distribution<int> item(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    const int i = item(rng);
    int j = item(rng);
    while (j == i) j = item(rng);
    const Match m{i, j, static_cast<MatchOutcome>(kind(rng))};
    const auto [a, b] = prediction_score(rank_a, rank_b, {m});
    const double total = a + b;
    if (m.outcome == MatchOutcome::kTie) {
      CHECK((total == 0.5 || total == 1.0));
    } else {
      CHECK(total >= 0.0);
      CHECK(total <= 2.0);
    }
  }
}

TEST_SUITE_END();
