// Copyright 2026 The OIE Authors.
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

// Scoring extractions against gold tuples, and wildcard tuple queries.

#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oie/extraction_record.hpp"

namespace oie {

// Textual view of a tuple: the gold-file schema, also used for predictions
// read back from JSONL.
struct GoldRecord {
  std::string sentence_id;
  std::string extractor;  // empty for gold tuples
  std::string arg1;
  std::string rel;
  std::optional<std::string> arg2;
  std::vector<std::string> extra_args;
  std::optional<std::string> clause_type;
  std::optional<Attribution> attributed_to;
  std::optional<ClausalModifier> clausal_modifier;
};

inline GoldRecord as_text(const GoldRecord& r) { return r; }

inline GoldRecord as_text(const ExtractionRecord& r) {
  GoldRecord g;
  g.sentence_id = r.sentence_id;
  g.extractor = std::string(to_string(r.extractor));
  g.arg1 = r.arg1.rendered;
  g.rel = r.rel.text();
  if (r.arg2) g.arg2 = r.arg2->rendered;
  g.extra_args = r.extra_arg_texts();
  if (r.clause_type) g.clause_type = std::string(to_string(*r.clause_type));
  g.attributed_to = r.attributed_to;
  g.clausal_modifier = r.clausal_modifier;
  return g;
}

// Accepts both gold lines and extractor output lines.
inline GoldRecord gold_record_from_json(const nlohmann::json& j) {
  auto optional_string = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
  };
  GoldRecord g;
  g.sentence_id = j.value("sentence_id", std::string());
  g.extractor = j.value("extractor", std::string());
  g.arg1 = j.at("arg1").get<std::string>();
  g.rel = j.at("rel").get<std::string>();
  if (g.arg1.empty() || g.rel.empty()) throw std::invalid_argument("arg1 and rel must be non-empty");
  g.arg2 = optional_string("arg2");
  if (j.contains("extra_args") && !j.at("extra_args").is_null()) {
    g.extra_args = j.at("extra_args").get<std::vector<std::string>>();
  }
  g.clause_type = optional_string("clause_type");
  if (j.contains("attributed_to") && j.at("attributed_to").is_object()) {
    const auto& a = j.at("attributed_to");
    g.attributed_to = Attribution{a.at("subject").get<std::string>(), a.at("verb").get<std::string>()};
  }
  if (j.contains("clausal_modifier") && j.at("clausal_modifier").is_object()) {
    const auto& m = j.at("clausal_modifier");
    g.clausal_modifier =
        ClausalModifier{m.at("marker").get<std::string>(), m.at("clause").get<std::string>()};
  }
  return g;
}

inline std::vector<GoldRecord> read_gold_jsonl(std::istream& in) {
  std::vector<GoldRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(gold_record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

// Case-folded, whitespace-collapsed.
inline std::string normalize_text(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// normalize_text plus a leading article stripped.
inline std::string normalize_argument(std::string_view text) {
  std::string out = normalize_text(text);
  for (std::string_view article : {"a ", "an ", "the "}) {
    if (out.size() > article.size() && out.starts_with(article)) {
      return out.substr(article.size());
    }
  }
  return out;
}

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Metrics from_counts(std::size_t matched, std::size_t predicted, std::size_t gold) {
    Metrics m;
    m.precision = predicted ? static_cast<double>(matched) / predicted : 0.0;
    m.recall = gold ? static_cast<double>(matched) / gold : 0.0;
    const double sum = m.precision + m.recall;
    m.f1 = sum > 0.0 ? 2.0 * m.precision * m.recall / sum : 0.0;
    return m;
  }
};

struct GuardCounts {
  // Prediction shares a gold relation but none of that relation's subjects.
  std::size_t incoherent = 0;
  // Prediction's "rel arg2" is a strict prefix of a gold relation with the
  // same subject, i.e. a light-verb construction cut short.
  std::size_t uninformative = 0;
  std::size_t existential_subjects = 0;
};

struct EvalReport {
  Metrics exact;
  Metrics overlap;
  std::map<std::string, Metrics> per_extractor;  // exact matching
  GuardCounts guards;
  std::size_t gold_count = 0;
  std::size_t predicted_count = 0;
};

namespace detail {

struct NormalizedTuple {
  std::string sentence_id;
  std::string arg1;
  std::string rel;
  std::string arg2;
  bool has_arg2 = false;
  std::vector<std::string> extras;  // sorted

  static NormalizedTuple of(const GoldRecord& r) {
    NormalizedTuple t;
    t.sentence_id = r.sentence_id;
    t.arg1 = normalize_argument(r.arg1);
    t.rel = normalize_text(r.rel);
    t.has_arg2 = r.arg2.has_value();
    if (r.arg2) t.arg2 = normalize_argument(*r.arg2);
    for (const auto& e : r.extra_args) t.extras.push_back(normalize_argument(e));
    std::sort(t.extras.begin(), t.extras.end());
    return t;
  }

  bool operator==(const NormalizedTuple&) const = default;
};

inline std::set<std::string> word_set(std::string_view text) {
  std::set<std::string> words;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) words.emplace(text.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

inline double jaccard(std::string_view a, std::string_view b) {
  const auto wa = word_set(a);
  const auto wb = word_set(b);
  if (wa.empty() && wb.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& w : wa) common += wb.count(w);
  return static_cast<double>(common) / static_cast<double>(wa.size() + wb.size() - common);
}

// Greedy one-to-one assignment over candidate pairs sorted by descending
// similarity (ties: gold order, then prediction order). Returns, for each
// prediction, the matched gold index or -1.
inline std::vector<long> greedy_match(std::size_t gold_count, std::size_t pred_count,
                                      const std::function<double(std::size_t, std::size_t)>& sim) {
  struct Pair {
    double score;
    std::size_t gold;
    std::size_t pred;
  };
  std::vector<Pair> pairs;
  for (std::size_t g = 0; g < gold_count; ++g) {
    for (std::size_t p = 0; p < pred_count; ++p) {
      const double s = sim(g, p);
      if (s >= 0.0) pairs.push_back({s, g, p});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.score > b.score; });
  std::vector<bool> gold_used(gold_count, false);
  std::vector<long> assignment(pred_count, -1);
  for (const Pair& pr : pairs) {
    if (gold_used[pr.gold] || assignment[pr.pred] >= 0) continue;
    gold_used[pr.gold] = true;
    assignment[pr.pred] = static_cast<long>(pr.gold);
  }
  return assignment;
}

}  // namespace detail

// Precision/recall/F1 at two granularities. Exact: normalized tuples equal
// (extras order-insensitive). Overlap: same sentence and relation, and both
// arguments reach `overlap_threshold` word Jaccard.
inline EvalReport score(std::span<const GoldRecord> gold, std::span<const GoldRecord> predicted,
                        double overlap_threshold = 0.75) {
  if (!(overlap_threshold > 0.0 && overlap_threshold <= 1.0)) {
    throw std::invalid_argument("overlap threshold must lie in (0, 1]");
  }
  using detail::NormalizedTuple;
  std::vector<NormalizedTuple> g;
  std::vector<NormalizedTuple> p;
  for (const auto& r : gold) g.push_back(NormalizedTuple::of(r));
  for (const auto& r : predicted) p.push_back(NormalizedTuple::of(r));

  EvalReport report;
  report.gold_count = g.size();
  report.predicted_count = p.size();

  const auto exact = detail::greedy_match(g.size(), p.size(), [&](std::size_t gi, std::size_t pi) {
    return g[gi] == p[pi] ? 1.0 : -1.0;
  });
  const auto overlap =
      detail::greedy_match(g.size(), p.size(), [&](std::size_t gi, std::size_t pi) {
        const auto& a = g[gi];
        const auto& b = p[pi];
        if (a.sentence_id != b.sentence_id || a.rel != b.rel) return -1.0;
        const double j1 = detail::jaccard(a.arg1, b.arg1);
        const double j2 = a.has_arg2 == b.has_arg2 ? detail::jaccard(a.arg2, b.arg2) : 0.0;
        if (j1 < overlap_threshold || j2 < overlap_threshold) return -1.0;
        return std::min(j1, j2);
      });
  auto matched = [](const std::vector<long>& assignment) {
    return static_cast<std::size_t>(
        std::count_if(assignment.begin(), assignment.end(), [](long x) { return x >= 0; }));
  };
  report.exact = Metrics::from_counts(matched(exact), p.size(), g.size());
  report.overlap = Metrics::from_counts(matched(overlap), p.size(), g.size());

  std::map<std::string, std::pair<std::size_t, std::size_t>> by_extractor;  // matched, total
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto& [m, total] = by_extractor[predicted[i].extractor];
    ++total;
    if (exact[i] >= 0) ++m;
  }
  for (const auto& [name, counts] : by_extractor) {
    report.per_extractor[name] = Metrics::from_counts(counts.first, counts.second, g.size());
  }

  for (const auto& pred : p) {
    if (pred.arg1 == "there") ++report.guards.existential_subjects;
    bool rel_in_gold = false;
    bool subject_seen = false;
    bool truncated = false;
    for (const auto& gt : g) {
      if (gt.sentence_id != pred.sentence_id) continue;
      if (gt.rel == pred.rel) {
        rel_in_gold = true;
        subject_seen = subject_seen || gt.arg1 == pred.arg1;
      }
      if (gt.arg1 == pred.arg1 && pred.has_arg2) {
        const std::string merged = pred.rel + " " + pred.arg2;
        if (gt.rel.size() > merged.size() && gt.rel.starts_with(merged + " ")) truncated = true;
      }
    }
    if (rel_in_gold && !subject_seen) ++report.guards.incoherent;
    if (truncated) ++report.guards.uninformative;
  }
  return report;
}

inline EvalReport score(std::span<const GoldRecord> gold,
                        std::span<const ExtractionRecord> predicted,
                        double overlap_threshold = 0.75) {
  std::vector<GoldRecord> text;
  text.reserve(predicted.size());
  for (const auto& r : predicted) text.push_back(as_text(r));
  return score(gold, std::span<const GoldRecord>(text), overlap_threshold);
}

inline nlohmann::ordered_json to_json(const EvalReport& report) {
  auto metrics = [](const Metrics& m) {
    return nlohmann::ordered_json{{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
  };
  nlohmann::ordered_json j;
  j["gold"] = report.gold_count;
  j["predicted"] = report.predicted_count;
  j["exact"] = metrics(report.exact);
  j["overlap"] = metrics(report.overlap);
  j["per_extractor"] = nlohmann::ordered_json::object();
  for (const auto& [name, m] : report.per_extractor) j["per_extractor"][name] = metrics(m);
  j["guards"] = {{"incoherent", report.guards.incoherent},
                 {"uninformative", report.guards.uninformative},
                 {"existential_subjects", report.guards.existential_subjects}};
  return j;
}

// ("?", "kill", "bacteria"): "?" matches anything, including a missing arg2.
struct QueryTemplate {
  static constexpr std::string_view kWildcard = "?";

  std::string arg1{kWildcard};
  std::string rel{kWildcard};
  std::string arg2{kWildcard};

  bool all_wildcards() const {
    return arg1 == kWildcard && rel == kWildcard && arg2 == kWildcard;
  }
};

class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Record>
std::vector<Record> query(std::span<const Record> records, const QueryTemplate& pattern) {
  if (pattern.all_wildcards()) {
    throw QueryError("query needs at least one concrete slot");
  }
  auto wild = [](const std::string& s) { return s == QueryTemplate::kWildcard; };
  const std::string want_arg1 = normalize_argument(pattern.arg1);
  const std::string want_rel = normalize_text(pattern.rel);
  const std::string want_arg2 = normalize_argument(pattern.arg2);
  std::vector<Record> out;
  for (const Record& record : records) {
    const GoldRecord text = as_text(record);
    if (!wild(pattern.arg1) && normalize_argument(text.arg1) != want_arg1) continue;
    if (!wild(pattern.rel) && normalize_text(text.rel) != want_rel) continue;
    if (!wild(pattern.arg2) && (!text.arg2 || normalize_argument(*text.arg2) != want_arg2)) {
      continue;
    }
    out.push_back(record);
  }
  return out;
}

template <typename Record>
std::vector<Record> query(const std::vector<Record>& records, const QueryTemplate& pattern) {
  return query(std::span<const Record>(records), pattern);
}

}  // namespace oie
