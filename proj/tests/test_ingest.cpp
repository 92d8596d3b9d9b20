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

#include "rankmc/ingest.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "rankmc/errors.hpp"

using namespace rankmc;

namespace {

const char* kSmallCsv =
    "date,side_a,side_b,outcome\n"
    "2015-03-01,alpha,beta,A\n"
    "2015-04-01,alpha,beta,A\n"
    "2015-05-01,alpha,beta,T\n"
    "2015-06-01,beta,gamma,B\n";

}  // namespace

TEST_SUITE_BEGIN("ingest");

TEST_CASE("date parsing and comparison") {
  const Date d = parse_date("2018-04-12");
  CHECK(d.year == 2018);
  CHECK(d.month == 4);
  CHECK(d.day == 12);
  CHECK(parse_date("2018-04-12") < parse_date("2018-04-13"));
  CHECK(parse_date("2016-02-29") == (Date{2016, 2, 29}));
  CHECK_THROWS_AS(parse_date("2017-02-29"), DomainError);
  CHECK_THROWS_AS(parse_date("2018-13-01"), DomainError);
  CHECK_THROWS_AS(parse_date("12/04/2018"), DomainError);
  CHECK_THROWS_AS(parse_date("2018-4-12"), DomainError);
}

TEST_CASE("window is half-open") {
  // An eight-year backward window [t-8y, t) keeps the boundary start day
  // and excludes the end day.
  DateWindow w;
  w.start = Date{2010, 4, 12};
  w.end = Date{2018, 4, 12};
  CHECK(w.contains(Date{2010, 4, 12}));
  CHECK(w.contains(Date{2018, 4, 11}));
  CHECK_FALSE(w.contains(Date{2018, 4, 12}));
  CHECK_FALSE(w.contains(Date{2010, 4, 11}));
}

TEST_CASE("csv parsing reports line numbers") {
  const auto records = parse_matches_csv(kSmallCsv);
  CHECK(records.size() == 4);
  CHECK(records[0].side_a == "alpha");
  CHECK(records[3].outcome == MatchResult::kBWins);

  try {
    parse_matches_csv("date,side_a,side_b,outcome\n2015-01-01,a,b\n");
    FAIL("expected DomainError");
  } catch (const DomainError& err) {
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_matches_csv("nope\n"), DomainError);
  CHECK_THROWS_AS(
      parse_matches_csv("date,side_a,side_b,outcome\n2015-01-01,a,b,X\n"),
      DomainError);
  CHECK_THROWS_AS(
      parse_matches_csv("date,side_a,side_b,outcome\n2015-01-01,a,a,A\n"),
      DomainError);
}

TEST_CASE("football and weather aggregation arithmetic") {
  // Two wins plus a tie: points 3+3+1 = 7 vs 1, so 7/8 under football.
  const auto records = parse_matches_csv(
      "date,side_a,side_b,outcome\n"
      "2015-03-01,A,B,A\n"
      "2015-04-01,A,B,A\n"
      "2015-05-01,A,B,T\n");
  const AggregateResult football =
      aggregate_matches(records, football_scheme());
  CHECK(football.names == std::vector<std::string>{"A", "B"});
  CHECK(football.y.y(0, 1) == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
  CHECK(football.counts.counts(0, 1) == 3);

  // Three warmer months plus a tie: 3.5 vs 0.5 under weather.
  const auto weather_records = parse_matches_csv(
      "date,side_a,side_b,outcome\n"
      "2015-03-01,A,B,A\n"
      "2015-04-01,A,B,A\n"
      "2015-05-01,A,B,A\n"
      "2015-06-01,A,B,T\n");
  const AggregateResult weather =
      aggregate_matches(weather_records, weather_scheme());
  CHECK(weather.y.y(0, 1) == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(weather.y.y(0, 1) + weather.y.y(1, 0) == 1.0);
}

TEST_CASE("aggregation is record-order insensitive") {
  auto records = parse_matches_csv(kSmallCsv);
  const AggregateResult base = aggregate_matches(records, football_scheme());
  std::shuffle(records.begin(), records.end(), std::mt19937_64(4));
  const AggregateResult shuffled =
      aggregate_matches(records, football_scheme());
  CHECK(base.names == shuffled.names);
  CHECK(base.y.y == shuffled.y.y);
  CHECK(base.counts.counts == shuffled.counts.counts);
}

TEST_CASE("windowing drops pairs and unseen items with warnings") {
  const auto records = parse_matches_csv(kSmallCsv);
  DateWindow w;
  w.end = Date{2015, 6, 1};  // excludes the beta/gamma match
  const AggregateResult agg =
      aggregate_matches(records, football_scheme(), w);
  CHECK(agg.names == std::vector<std::string>{"alpha", "beta"});
  REQUIRE(agg.warnings.size() == 1);
  CHECK(agg.warnings[0].find("gamma") != std::string::npos);

  DateWindow empty;
  empty.end = Date{2000, 1, 1};
  CHECK_THROWS_AS(aggregate_matches(records, football_scheme(), empty),
                  DomainError);
}

TEST_CASE("zero-point pairs are excluded with a warning") {
  // A single decisive match under a loser-gets-zero scheme still has
  // positive total, so craft a zero-total pair via a custom scheme with
  // zero-point ties.
  const auto records = parse_matches_csv(
      "date,side_a,side_b,outcome\n"
      "2015-03-01,A,B,T\n"
      "2015-03-02,A,C,A\n"
      "2015-03-03,B,C,A\n");
  const PointScheme zero_tie{3.0, 0.0, 0.0};
  const AggregateResult agg = aggregate_matches(records, zero_tie);
  CHECK_FALSE(agg.edges.contains(0, 1));  // A-B tie carries no points
  CHECK(agg.edges.contains(0, 2));
  REQUIRE(agg.warnings.size() == 1);
  CHECK(agg.warnings[0].find("zero total points") != std::string::npos);
}

TEST_CASE("obscure_edges keeps certainty cases") {
  EdgeSet e(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.add(i, j);
  const StreamSeeder seeder(12);
  CHECK(obscure_edges(e, 1.0, seeder).num_edges() == 10);
  CHECK(obscure_edges(e, 0.0, seeder).num_edges() == 0);
}

TEST_CASE("obscure_edges keeps a binomial share") {
  EdgeSet e(46);  // 1035 edges
  int total = 0;
  for (int i = 0; i < 46; ++i)
    for (int j = i + 1; j < 46; ++j) {
      e.add(i, j);
      ++total;
    }
  REQUIRE(total == 1035);
  // mean 724.5, sigma ~14.7 at p = 0.7
  for (std::uint64_t seed : {9ULL, 10ULL, 11ULL}) {
    const int kept = obscure_edges(e, 0.7, StreamSeeder(seed)).num_edges();
    CHECK(std::abs(kept - 724.5) < 3.0 * 14.75);
  }
}

TEST_CASE("ranking json round-trips") {
  RankingDocument doc;
  doc.algorithm = "mcmle";
  doc.item_names = {"alpha", "gamma", "beta"};
  doc.item_scores = {1.0, 0.7253551, 0.125};
  doc.diagnostics.iterations = 17;
  doc.diagnostics.residual = 3.25e-10;
  doc.diagnostics.rmax_used = 8.0;
  doc.diagnostics.seed = 99;
  const std::string text = ranking_to_json(doc);
  const RankingDocument parsed = ranking_from_json(text);
  CHECK(parsed == doc);
  CHECK_THROWS_AS(ranking_from_json("{"), DomainError);
  CHECK_THROWS_AS(ranking_from_json("{\"algorithm\":\"x\"}"), DomainError);
}

TEST_CASE("resolve_matches rejects unknown teams") {
  const auto records = parse_matches_csv(kSmallCsv);
  const std::vector<std::string> names = {"alpha", "beta", "gamma"};
  const auto matches = resolve_matches(records, names);
  CHECK(matches.size() == 4);
  CHECK(matches[0].first == 0);
  CHECK(matches[0].second == 1);
  CHECK(matches[3].outcome == MatchOutcome::kSecondWins);
  CHECK_THROWS_AS(resolve_matches(records, {"alpha", "beta"}), DomainError);
}

TEST_SUITE_END();
