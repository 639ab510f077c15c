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

// Verb-phrase relation extraction.
//
// A relation phrase starts at a verb and is the longest token run matching
//
//   V | V P | V W* P
//   V = verb particle? adv?
//   W = noun | adj | adv | pron | det
//   P = prep | particle | inf. marker
//
// Matches that touch are merged, so "is" + "headquartered in" becomes a
// single phrase. Arguments are the nearest noun phrases on either side.

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oie/extraction_record.hpp"
#include "oie/lexicon.hpp"
#include "oie/sentence_graph.hpp"

namespace oie {

enum class Alternative { kV, kVP, kVWP };

inline std::string_view to_string(Alternative a) {
  switch (a) {
    case Alternative::kV:
      return "V";
    case Alternative::kVP:
      return "VP";
    case Alternative::kVWP:
      return "VW*P";
  }
  return "V";
}

// What each token contributes to its match.
enum class PhraseRole { kVerb, kParticle, kAdverb, kWord, kPreposition };

struct RelationPhraseSpan {
  PhraseSpan span;  // head_index == anchor_verb
  std::vector<Alternative> alternatives_used;
  TokenIndex anchor_verb = 0;
  std::vector<PhraseRole> roles;  // parallel to span.token_indices
  // Lemmas of verb/particle/adverb tokens plus prepositions, lower-cased;
  // W tokens are dropped.
  std::string normalized;
};

// Normalized relation strings; empty accepts everything.
struct PatternLexicon {
  WordSet entries;

  bool accepts_all() const { return entries.empty(); }
};

inline PatternLexicon read_pattern_lexicon(std::istream& in) { return {read_word_list(in)}; }

namespace detail {

inline bool is_particle(const SentenceGraph& g, TokenIndex i, TokenIndex verb) {
  const Token& t = g.token(i);
  if (t.deprel == "compound:prt") return true;
  return t.upos == Upos::kPart && t.head == verb && to_lower(t.surface) != "to";
}

inline bool is_adverb(const SentenceGraph& g, TokenIndex i) {
  const Token& t = g.token(i);
  return t.upos == Upos::kAdv || (t.upos == Upos::kPart && t.deprel == "advmod");
}

inline bool is_word(const SentenceGraph& g, TokenIndex i) {
  switch (g.token(i).upos) {
    case Upos::kNoun:
    case Upos::kAdj:
    case Upos::kAdv:
    case Upos::kPron:
    case Upos::kDet:
      return true;
    default:
      return false;
  }
}

inline bool is_preposition(const SentenceGraph& g, TokenIndex i) {
  const Token& t = g.token(i);
  if (t.upos == Upos::kAdp || t.deprel == "compound:prt") return true;
  return t.upos == Upos::kPart && to_lower(t.surface) == "to";
}

struct SegmentMatch {
  TokenIndex end = 0;  // one past the last token
  Alternative alternative = Alternative::kV;
  std::vector<PhraseRole> roles;
};

// Longest single V | VP | VW*P segment starting at verb `start`.
inline SegmentMatch match_segment(const SentenceGraph& g, TokenIndex start) {
  const TokenIndex n = g.size();
  // Every way the "verb particle? adv?" prefix can end.
  std::vector<std::vector<PhraseRole>> prefixes{{PhraseRole::kVerb}};
  TokenIndex next = start + 1;
  if (next <= n && is_particle(g, next, start)) {
    prefixes.push_back({PhraseRole::kVerb, PhraseRole::kParticle});
    if (next + 1 <= n && is_adverb(g, next + 1)) {
      prefixes.push_back({PhraseRole::kVerb, PhraseRole::kParticle, PhraseRole::kAdverb});
    }
  }
  if (next <= n && is_adverb(g, next)) {
    prefixes.push_back({PhraseRole::kVerb, PhraseRole::kAdverb});
  }

  SegmentMatch best;
  auto consider = [&](TokenIndex end, Alternative alt, std::vector<PhraseRole> roles) {
    // Longer wins; on equal length the simpler alternative found first stays.
    if (end > best.end) best = SegmentMatch{end, alt, std::move(roles)};
  };
  for (const auto& prefix : prefixes) {
    const TokenIndex after = start + static_cast<TokenIndex>(prefix.size());
    consider(after, Alternative::kV, prefix);
    std::vector<PhraseRole> roles = prefix;
    for (TokenIndex k = after; k <= n; ++k) {
      if (is_preposition(g, k)) {
        auto with_p = roles;
        with_p.push_back(PhraseRole::kPreposition);
        consider(k + 1, k == after ? Alternative::kVP : Alternative::kVWP, std::move(with_p));
      }
      if (!is_word(g, k)) break;
      roles.push_back(PhraseRole::kWord);
    }
  }
  return best;
}

inline std::string normalize_relation(const SentenceGraph& g, std::span<const TokenIndex> tokens,
                                      std::span<const PhraseRole> roles) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = g.token(tokens[i]);
    std::string part;
    switch (roles[i]) {
      case PhraseRole::kWord:
        continue;
      case PhraseRole::kPreposition:
        part = to_lower(t.surface);
        break;
      default:
        part = to_lower(t.lemma.empty() || t.lemma == "_" ? t.surface : t.lemma);
        break;
    }
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

inline bool is_relative_or_wh(const Token& t) {
  static const WordSet kWhWords = {"who",     "whom",     "whose",     "which",
                                   "what",    "whoever",  "whomever",  "whatever",
                                   "whichever", "where",  "when",      "why", "how"};
  const std::string lower = to_lower(t.surface);
  if (kWhWords.contains(lower)) return true;
  return lower == "that" && t.upos == Upos::kPron;
}

inline bool is_existential(const Token& t) {
  return t.deprel == "expl" || to_lower(t.surface) == "there";
}

}  // namespace detail

inline std::vector<RelationPhraseSpan> match_relation_phrases(const SentenceGraph& sentence) {
  struct Raw {
    TokenIndex begin;
    detail::SegmentMatch match;
  };
  std::vector<Raw> raw;
  for (TokenIndex i = 1; i <= sentence.size();) {
    if (!is_verbal(sentence.token(i).upos)) {
      ++i;
      continue;
    }
    auto m = detail::match_segment(sentence, i);
    const TokenIndex end = m.end;
    raw.push_back({i, std::move(m)});
    i = end;
  }

  std::vector<RelationPhraseSpan> out;
  for (std::size_t k = 0; k < raw.size();) {
    RelationPhraseSpan phrase;
    phrase.anchor_verb = raw[k].begin;
    std::vector<TokenIndex> tokens;
    TokenIndex end = raw[k].begin;
    do {
      for (TokenIndex t = raw[k].begin; t < raw[k].match.end; ++t) tokens.push_back(t);
      phrase.roles.insert(phrase.roles.end(), raw[k].match.roles.begin(),
                          raw[k].match.roles.end());
      phrase.alternatives_used.push_back(raw[k].match.alternative);
      end = raw[k].match.end;
      ++k;
    } while (k < raw.size() && raw[k].begin == end);
    phrase.normalized = detail::normalize_relation(sentence, tokens, phrase.roles);
    phrase.span = make_span(sentence, std::move(tokens), phrase.anchor_verb);
    out.push_back(std::move(phrase));
  }
  return out;
}

inline std::vector<RelationPhraseSpan> apply_lexical_constraint(
    std::vector<RelationPhraseSpan> phrases, const PatternLexicon& lexicon) {
  if (lexicon.accepts_all()) return phrases;
  std::erase_if(phrases, [&](const RelationPhraseSpan& p) {
    return !lexicon.entries.contains(p.normalized);
  });
  return phrases;
}

// Nearest eligible noun phrase on each side of the relation. Relative
// pronouns, wh-words and existential "there" are never arguments, and a
// prepositional object cannot serve as the left argument; ineligible chunks
// are passed over in favour of the next one out.
inline std::optional<std::pair<PhraseSpan, PhraseSpan>> find_arguments(
    const SentenceGraph& sentence, const RelationPhraseSpan& rel,
    std::span<const PhraseSpan> chunks) {
  auto eligible = [&](const PhraseSpan& chunk, bool left) {
    const Token& head = sentence.token(chunk.head_index);
    if (detail::is_relative_or_wh(head) || detail::is_existential(head)) return false;
    return !(left && sentence.first_child(chunk.head_index, "case"));
  };
  const PhraseSpan* left = nullptr;
  const PhraseSpan* right = nullptr;
  for (const PhraseSpan& c : chunks) {
    if (c.back() < rel.span.front() && eligible(c, true)) {
      if (!left || c.back() > left->back()) left = &c;
    }
    if (c.front() > rel.span.back() && eligible(c, false)) {
      if (!right || c.front() < right->front()) right = &c;
    }
  }
  if (!left || !right) return std::nullopt;
  return std::make_pair(*left, *right);
}

inline std::optional<std::pair<PhraseSpan, PhraseSpan>> find_arguments(
    const SentenceGraph& sentence, const RelationPhraseSpan& rel) {
  const auto chunks = noun_phrase_chunks(sentence);
  return find_arguments(sentence, rel, chunks);
}

inline std::vector<ExtractionRecord> extract_verb_phrase(const SentenceGraph& sentence,
                                                         const PatternLexicon& lexicon = {}) {
  const auto chunks = noun_phrase_chunks(sentence);
  std::vector<ExtractionRecord> records;
  for (auto& phrase : apply_lexical_constraint(match_relation_phrases(sentence), lexicon)) {
    auto args = find_arguments(sentence, phrase, chunks);
    if (!args) continue;
    ExtractionRecord r;
    r.sentence_id = sentence.sentence_id();
    r.extractor = ExtractorId::kVerbPhrase;
    r.arg1 = std::move(args->first);
    r.rel.span = std::move(phrase.span);
    r.arg2 = std::move(args->second);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace oie
