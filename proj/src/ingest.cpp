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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rankmc/errors.hpp"

namespace rankmc {
namespace {

using nlohmann::json;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

bool days_valid(const Date& d) {
  static const int days_in_month[] = {31, 28, 31, 30, 31, 30,
                                      31, 31, 30, 31, 30, 31};
  if (d.month < 1 || d.month > 12 || d.day < 1) return false;
  int limit = days_in_month[d.month - 1];
  const bool leap =
      d.year % 4 == 0 && (d.year % 100 != 0 || d.year % 400 == 0);
  if (d.month == 2 && leap) limit = 29;
  return d.day <= limit;
}

}  // namespace

Date parse_date(const std::string& text) {
  Date d;
  char extra;
  if (std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &d.year, &d.month, &d.day,
                  &extra) != 3 ||
      text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !days_valid(d)) {
    throw DomainError("unparseable date '" + text + "' (expected YYYY-MM-DD)");
  }
  return d;
}

PointScheme football_scheme() { return PointScheme{3.0, 1.0, 0.0}; }
PointScheme weather_scheme() { return PointScheme{1.0, 0.5, 0.0}; }

bool DateWindow::contains(const Date& d) const {
  if (start.has_value() && d < *start) return false;
  if (end.has_value() && !(d < *end)) return false;
  return true;
}

std::vector<MatchRecord> parse_matches_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<MatchRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_fields(line);
    if (line_no == 1) {
      if (fields != std::vector<std::string>{"date", "side_a", "side_b",
                                             "outcome"}) {
        throw DomainError("line 1: expected header date,side_a,side_b,outcome");
      }
      continue;
    }
    if (fields.size() != 4) {
      throw DomainError("line " + std::to_string(line_no) +
                        ": expected 4 fields, got " +
                        std::to_string(fields.size()));
    }
    MatchRecord rec;
    try {
      rec.date = parse_date(fields[0]);
    } catch (const DomainError& err) {
      throw DomainError("line " + std::to_string(line_no) + ": " + err.what());
    }
    rec.side_a = fields[1];
    rec.side_b = fields[2];
    if (rec.side_a.empty() || rec.side_b.empty() ||
        rec.side_a == rec.side_b) {
      throw DomainError("line " + std::to_string(line_no) +
                        ": sides must be non-empty and distinct");
    }
    if (fields[3] == "A") {
      rec.outcome = MatchResult::kAWins;
    } else if (fields[3] == "B") {
      rec.outcome = MatchResult::kBWins;
    } else if (fields[3] == "T") {
      rec.outcome = MatchResult::kTie;
    } else {
      throw DomainError("line " + std::to_string(line_no) +
                        ": outcome must be A, B or T");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<MatchRecord> load_matches_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open matches file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matches_csv(buffer.str());
}

AggregateResult aggregate_matches(const std::vector<MatchRecord>& records,
                                  const PointScheme& scheme,
                                  const DateWindow& window) {
  if (!(scheme.win_points > scheme.tie_points_each) ||
      scheme.tie_points_each < 0.0) {
    throw DomainError("point scheme needs win > tie_each >= 0");
  }
  std::vector<const MatchRecord*> kept;
  std::set<std::string> all_names;
  std::set<std::string> kept_names;
  for (const MatchRecord& rec : records) {
    all_names.insert(rec.side_a);
    all_names.insert(rec.side_b);
    if (window.contains(rec.date)) {
      kept.push_back(&rec);
      kept_names.insert(rec.side_a);
      kept_names.insert(rec.side_b);
    }
  }
  if (kept.empty()) {
    throw DomainError("no match records inside the requested window");
  }

  AggregateResult out;
  out.names.assign(kept_names.begin(), kept_names.end());  // sorted
  for (const std::string& name : all_names) {
    if (!kept_names.count(name)) {
      out.warnings.push_back("item '" + name +
                             "' only appears outside the window; dropped");
    }
  }
  const int n = static_cast<int>(out.names.size());
  if (n < 2) throw DomainError("need at least two items inside the window");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[out.names[i]] = i;

  Eigen::MatrixXd points = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXi games = Eigen::MatrixXi::Zero(n, n);
  for (const MatchRecord* rec : kept) {
    const int a = index[rec->side_a];
    const int b = index[rec->side_b];
    switch (rec->outcome) {
      case MatchResult::kAWins:
        points(a, b) += scheme.win_points;
        points(b, a) += scheme.loser_points;
        break;
      case MatchResult::kBWins:
        points(b, a) += scheme.win_points;
        points(a, b) += scheme.loser_points;
        break;
      case MatchResult::kTie:
        points(a, b) += scheme.tie_points_each;
        points(b, a) += scheme.tie_points_each;
        break;
    }
    games(a, b) += 1;
    games(b, a) += 1;
  }

  out.edges = EdgeSet(n);
  out.y.y = Eigen::MatrixXd::Zero(n, n);
  out.counts.counts = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (games(i, j) == 0) continue;
      const double total = points(i, j) + points(j, i);
      if (total <= 0.0) {
        out.warnings.push_back("pair ('" + out.names[i] + "','" +
                               out.names[j] +
                               "') has zero total points; excluded");
        continue;
      }
      out.edges.add(i, j);
      const double frac = points(i, j) / total;
      out.y.y(i, j) = frac;
      out.y.y(j, i) = 1.0 - frac;
      out.counts.counts(i, j) = games(i, j);
      out.counts.counts(j, i) = games(i, j);
    }
  }
  return out;
}

EdgeSet obscure_edges(const EdgeSet& e, double p_obs,
                      const StreamSeeder& seeder) {
  if (!(p_obs >= 0.0) || !(p_obs <= 1.0)) {
    throw DomainError("p_obs must lie in [0, 1]");
  }
  EdgeSet out(e.n());
  for (const auto& [a, b] : e.pairs()) {
    auto g = seeder.pair_stream(a, b);
    if (uniform01(g) < p_obs) out.add(a, b);
  }
  return out;
}

RankingDocument make_ranking_document(const std::string& algorithm,
                                      const RankingResult& result,
                                      const std::vector<std::string>& names,
                                      std::uint64_t seed) {
  RankingDocument doc;
  doc.algorithm = algorithm;
  for (int item : result.order) {
    doc.item_names.push_back(names[item]);
    doc.item_scores.push_back(result.scores[item]);
  }
  doc.diagnostics.iterations = result.diagnostics.iterations;
  doc.diagnostics.residual = result.diagnostics.final_residual;
  doc.diagnostics.rmax_used = result.diagnostics.rmax_used;
  doc.diagnostics.seed = seed;
  return doc;
}

std::string ranking_to_json(const RankingDocument& doc) {
  json items = json::array();
  for (std::size_t k = 0; k < doc.item_names.size(); ++k) {
    items.push_back(json{{"name", doc.item_names[k]},
                         {"score", doc.item_scores[k]},
                         {"rank", k + 1}});
  }
  const json j = {
      {"algorithm", doc.algorithm},
      {"items", items},
      {"diagnostics",
       {{"iterations", doc.diagnostics.iterations},
        {"residual", doc.diagnostics.residual},
        {"rmax_used", doc.diagnostics.rmax_used},
        {"seed", doc.diagnostics.seed}}},
  };
  return j.dump(2) + "\n";
}

RankingDocument ranking_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& err) {
    throw DomainError(std::string("invalid ranking JSON: ") + err.what());
  }
  RankingDocument doc;
  try {
    doc.algorithm = j.at("algorithm").get<std::string>();
    for (const json& item : j.at("items")) {
      doc.item_names.push_back(item.at("name").get<std::string>());
      doc.item_scores.push_back(item.at("score").get<double>());
    }
    const json& d = j.at("diagnostics");
    doc.diagnostics.iterations = d.at("iterations").get<int>();
    doc.diagnostics.residual = d.at("residual").get<double>();
    doc.diagnostics.rmax_used = d.at("rmax_used").get<double>();
    doc.diagnostics.seed = d.at("seed").get<std::uint64_t>();
  } catch (const json::exception& err) {
    throw DomainError(std::string("ranking JSON missing fields: ") +
                      err.what());
  }
  return doc;
}

std::vector<Match> resolve_matches(const std::vector<MatchRecord>& records,
                                   const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<int>(i);
  }
  std::vector<Match> out;
  out.reserve(records.size());
  for (const MatchRecord& rec : records) {
    const auto a = index.find(rec.side_a);
    const auto b = index.find(rec.side_b);
    if (a == index.end() || b == index.end()) {
      throw DomainError("team '" +
                        (a == index.end() ? rec.side_a : rec.side_b) +
                        "' is missing from the ranking");
    }
    Match m;
    m.first = a->second;
    m.second = b->second;
    switch (rec.outcome) {
      case MatchResult::kAWins: m.outcome = MatchOutcome::kFirstWins; break;
      case MatchResult::kBWins: m.outcome = MatchOutcome::kSecondWins; break;
      case MatchResult::kTie: m.outcome = MatchOutcome::kTie; break;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace rankmc
