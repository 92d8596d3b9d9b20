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

#ifndef RANKMC_INGEST_HPP_
#define RANKMC_INGEST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankmc/metrics.hpp"
#include "rankmc/model.hpp"

namespace rankmc {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;
};

// "YYYY-MM-DD"; throws DomainError on malformed input.
Date parse_date(const std::string& text);

enum class MatchResult { kAWins, kBWins, kTie };

struct MatchRecord {
  Date date;
  std::string side_a;
  std::string side_b;
  MatchResult outcome = MatchResult::kAWins;
};

struct PointScheme {
  double win_points = 1.0;
  double tie_points_each = 0.5;
  double loser_points = 0.0;
};

PointScheme football_scheme();  // 3 / 1 each / 0
PointScheme weather_scheme();   // 1 / 0.5 each / 0

// Optional half-open date window [start, end).
struct DateWindow {
  std::optional<Date> start;
  std::optional<Date> end;

  bool contains(const Date& d) const;
};

// Matches CSV: header "date,side_a,side_b,outcome", outcome in {A,B,T}.
// Malformed rows report their 1-based line number.
std::vector<MatchRecord> parse_matches_csv(const std::string& text);
std::vector<MatchRecord> load_matches_csv(const std::string& path);

struct AggregateResult {
  ObservationMatrix y;
  ComparisonCounts counts;
  EdgeSet edges;
  std::vector<std::string> names;  // sorted; index = item id
  std::vector<std::string> warnings;

  AggregateResult() : edges(2) {}
};

// Accumulates per-pair points under the scheme over the windowed records;
// win fractions are each side's share of the pair's points. Pairs whose
// points total zero are left out of the edge set with a warning, as are
// items that only appear outside the window.
AggregateResult aggregate_matches(const std::vector<MatchRecord>& records,
                                  const PointScheme& scheme,
                                  const DateWindow& window = {});

// Keeps each edge independently with probability p_obs.
EdgeSet obscure_edges(const EdgeSet& e, double p_obs,
                      const StreamSeeder& seeder);

// Ranking document: named items in rank order plus solver diagnostics.
struct RankingDiagnostics {
  int iterations = 0;
  double residual = 0.0;
  double rmax_used = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const RankingDiagnostics&) const = default;
};

struct RankingDocument {
  std::string algorithm;
  std::vector<std::string> item_names;  // rank order, best first
  std::vector<double> item_scores;
  RankingDiagnostics diagnostics;

  bool operator==(const RankingDocument&) const = default;
};

RankingDocument make_ranking_document(const std::string& algorithm,
                                      const RankingResult& result,
                                      const std::vector<std::string>& names,
                                      std::uint64_t seed);

std::string ranking_to_json(const RankingDocument& doc);
RankingDocument ranking_from_json(const std::string& text);

// Matches resolved against a ranking document's item set; every
// participant must be present.
std::vector<Match> resolve_matches(const std::vector<MatchRecord>& records,
                                   const std::vector<std::string>& names);

}  // namespace rankmc

#endif  // RANKMC_INGEST_HPP_
