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

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oie/sentence_graph.hpp"

namespace oie {

enum class ExtractorId { kVerbPhrase, kClause, kNounRule };

inline std::string_view to_string(ExtractorId id) {
  switch (id) {
    case ExtractorId::kVerbPhrase:
      return "verb-phrase";
    case ExtractorId::kClause:
      return "clause";
    case ExtractorId::kNounRule:
      return "noun-rule";
  }
  return "verb-phrase";
}

inline std::optional<ExtractorId> parse_extractor_id(std::string_view name) {
  if (name == "verb-phrase") return ExtractorId::kVerbPhrase;
  if (name == "clause") return ExtractorId::kClause;
  if (name == "noun-rule") return ExtractorId::kNounRule;
  return std::nullopt;
}

enum class ClauseType { kSV, kSVA, kSVC, kSVO, kSVOO, kSVOA, kSVOC };

inline std::string_view to_string(ClauseType type) {
  switch (type) {
    case ClauseType::kSV:
      return "SV";
    case ClauseType::kSVA:
      return "SVA";
    case ClauseType::kSVC:
      return "SVC";
    case ClauseType::kSVO:
      return "SVO";
    case ClauseType::kSVOO:
      return "SVOO";
    case ClauseType::kSVOA:
      return "SVOA";
    case ClauseType::kSVOC:
      return "SVOC";
  }
  return "SV";
}

struct Preposition {
  TokenIndex index = 0;
  std::string surface;

  friend bool operator==(const Preposition&, const Preposition&) = default;
};

struct Relation {
  PhraseSpan span;
  // Moved out of the first argument ("died" + "in").
  std::optional<Preposition> preposition;
  // Replaces the surface rendering when set (noun-mediated "be R of").
  std::optional<std::string> normalized;

  std::string text() const {
    if (normalized) return *normalized;
    if (preposition) return span.rendered + " " + preposition->surface;
    return span.rendered;
  }

  std::vector<TokenIndex> token_indices() const {
    std::vector<TokenIndex> out = span.token_indices;
    if (preposition) {
      out.insert(std::upper_bound(out.begin(), out.end(), preposition->index),
                 preposition->index);
    }
    return out;
  }

  friend bool operator==(const Relation&, const Relation&) = default;
};

// A trailing argument. When `bracketed_preposition` is set the span excludes
// the preposition, which renders as a "[prep] " prefix.
struct Argument {
  PhraseSpan span;
  std::optional<std::string> bracketed_preposition;

  std::string text() const {
    if (bracketed_preposition) return "[" + *bracketed_preposition + "] " + span.rendered;
    return span.rendered;
  }

  friend bool operator==(const Argument&, const Argument&) = default;
};

struct Attribution {
  std::string subject;
  std::string verb;

  friend bool operator==(const Attribution&, const Attribution&) = default;
};

struct ClausalModifier {
  std::string marker;
  std::string clause;

  friend bool operator==(const ClausalModifier&, const ClausalModifier&) = default;
};

struct ExtractionRecord {
  std::string sentence_id;
  ExtractorId extractor = ExtractorId::kVerbPhrase;
  PhraseSpan arg1;
  Relation rel;
  std::optional<PhraseSpan> arg2;
  std::vector<Argument> extra_args;
  std::optional<ClauseType> clause_type;
  std::optional<Attribution> attributed_to;
  std::optional<ClausalModifier> clausal_modifier;
  // Rule-based extraction has no scoring model; kept for format stability.
  double confidence = 1.0;

  std::string arg2_text() const { return arg2 ? arg2->rendered : std::string(); }

  std::vector<std::string> extra_arg_texts() const {
    std::vector<std::string> out;
    out.reserve(extra_args.size());
    for (const Argument& a : extra_args) out.push_back(a.text());
    return out;
  }

  // The token standing for the relation's predicate when scoping annotations.
  TokenIndex relation_anchor() const { return rel.span.head_index; }

  friend bool operator==(const ExtractionRecord&, const ExtractionRecord&) = default;
};

}  // namespace oie
