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

// Context for extracted facts: who asserts an embedded claim, and which
// condition a fact depends on. Annotators only fill the annotation fields;
// they never drop, reorder or rewrite a record's arguments or relation.
//
// Also holds a small fixed set of noun-mediated patterns for relations that
// no verb expresses ("Microsoft co-founder Bill Gates").

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "oie/extraction_record.hpp"
#include "oie/lexicon.hpp"
#include "oie/sentence_graph.hpp"

namespace oie {

inline WordSet default_attribution_verbs() {
  return {"believe", "say", "claim", "think", "state", "argue", "report", "suggest"};
}

inline WordSet default_clause_markers() {
  return {"if", "unless", "when", "although", "while", "because"};
}

inline WordSet default_relational_nouns() {
  return {"founder", "co-founder", "president", "ceo", "author", "director", "capital"};
}

namespace detail {

inline std::string token_lemma(const Token& t) {
  return to_lower(t.lemma.empty() || t.lemma == "_" ? t.surface : t.lemma);
}

inline TokenIndex depth_of(const SentenceGraph& g, TokenIndex i) {
  TokenIndex depth = 0;
  for (; i != 0; i = g.token(i).head) ++depth;
  return depth;
}

}  // namespace detail

// A record whose relation anchor lies inside a clausal complement of an
// attribution verb is credited to that verb's subject. With nested
// complements the innermost one wins.
inline std::vector<ExtractionRecord> annotate_attribution(
    const SentenceGraph& sentence, std::vector<ExtractionRecord> records,
    const WordSet& attribution_verbs = default_attribution_verbs()) {
  std::vector<TokenIndex> complements;
  for (TokenIndex i = 1; i <= sentence.size(); ++i) {
    if (base_label(sentence.token(i).deprel) == "ccomp") complements.push_back(i);
  }
  std::stable_sort(complements.begin(), complements.end(), [&](TokenIndex a, TokenIndex b) {
    return detail::depth_of(sentence, a) < detail::depth_of(sentence, b);
  });
  static const LabelSet kSubjectExclusions = {"punct", "acl:relcl", "parataxis"};
  for (TokenIndex ccomp : complements) {
    const TokenIndex matrix = sentence.token(ccomp).head;
    const std::string lemma = detail::token_lemma(sentence.token(matrix));
    if (!attribution_verbs.contains(lemma)) continue;
    const auto subject = sentence.first_child(matrix, "nsubj");
    if (!subject) continue;
    const Attribution attribution{
        subtree_yield(sentence, *subject, kSubjectExclusions).rendered, lemma};
    for (ExtractionRecord& r : records) {
      if (sentence.dominates(ccomp, r.relation_anchor())) r.attributed_to = attribution;
    }
  }
  return records;
}

// Records of the clause that governs an adverbial clause introduced by one
// of `markers` gain (marker, adverbial clause text). Records extracted from
// inside the adverbial clause stay untouched.
inline std::vector<ExtractionRecord> annotate_clausal_modifier(
    const SentenceGraph& sentence, std::vector<ExtractionRecord> records,
    const WordSet& markers = default_clause_markers()) {
  for (TokenIndex advcl = 1; advcl <= sentence.size(); ++advcl) {
    const Token& t = sentence.token(advcl);
    if (base_label(t.deprel) != "advcl") continue;
    const auto mark = sentence.first_child(advcl, "mark");
    if (!mark) continue;
    const std::string marker = to_lower(sentence.token(*mark).surface);
    if (!markers.contains(marker)) continue;
    const TokenIndex matrix = t.head;
    if (matrix == 0) continue;
    auto tokens = collect_subtree(sentence, advcl, [&](TokenIndex, TokenIndex child) {
      return child != *mark && sentence.token(child).deprel != "punct";
    });
    const ClausalModifier modifier{marker, render_tokens(sentence, tokens)};
    for (ExtractionRecord& r : records) {
      const TokenIndex anchor = r.relation_anchor();
      if (sentence.dominates(matrix, anchor) && !sentence.dominates(advcl, anchor)) {
        r.clausal_modifier = modifier;
      }
    }
  }
  return records;
}

// Fixed noun-mediated patterns, each yielding (person, "be R of", org) for a
// relational noun R:
//   compound title:  "Microsoft co-founder Bill Gates"
//   apposition:      "Bill Gates, co-founder of Microsoft,"
inline std::vector<ExtractionRecord> noun_mediated_rules(
    const SentenceGraph& sentence, const WordSet& relational_nouns = default_relational_nouns()) {
  std::vector<ExtractionRecord> records;
  auto emit = [&](const PhraseSpan& holder, TokenIndex noun, const PhraseSpan& org) {
    const Token& holder_head = sentence.token(holder.head_index);
    if (holder_head.deprel == "expl" || to_lower(holder_head.surface) == "there") return;
    ExtractionRecord r;
    r.sentence_id = sentence.sentence_id();
    r.extractor = ExtractorId::kNounRule;
    r.arg1 = holder;
    r.rel.span = make_span(sentence, {noun}, noun);
    r.rel.normalized = "be " + sentence.token(noun).surface + " of";
    r.arg2 = org;
    records.push_back(std::move(r));
  };
  auto name_of = [&](TokenIndex head, TokenIndex skip) {
    auto tokens = collect_subtree(sentence, head, [&](TokenIndex parent, TokenIndex child) {
      const std::string& label = sentence.token(child).deprel;
      if (child == skip || label == "punct") return false;
      if (parent == head) {
        return label == "compound" || label == "det" || base_label(label) == "flat" ||
               label == "amod" || label == "nummod";
      }
      return true;
    });
    return make_span(sentence, std::move(tokens), head);
  };

  for (TokenIndex r = 1; r <= sentence.size(); ++r) {
    const Token& noun = sentence.token(r);
    if (!relational_nouns.contains(to_lower(noun.surface)) &&
        !relational_nouns.contains(detail::token_lemma(noun))) {
      continue;
    }
    const TokenIndex head = noun.head;
    if (head == 0 || !is_nominal(sentence.token(head).upos)) continue;

    if ((noun.deprel == "compound" || noun.deprel == "appos") && r < head) {
      for (TokenIndex c : sentence.children(r)) {
        const std::string& label = sentence.token(c).deprel;
        if (c < r && (label == "compound" || label == "nmod:poss") &&
            is_nominal(sentence.token(c).upos)) {
          emit(name_of(head, r), r, name_of(c, 0));
          break;
        }
      }
    } else if (noun.deprel == "appos" && r > head) {
      for (TokenIndex c : sentence.children(r)) {
        const Token& t = sentence.token(c);
        if (c > r && base_label(t.deprel) == "nmod" && t.deprel != "nmod:poss") {
          const auto prep = sentence.first_child(c, "case");
          if (prep && to_lower(sentence.token(*prep).surface) == "of") {
            emit(name_of(head, r), r, name_of(c, 0));
            break;
          }
        }
      }
    }
  }
  return records;
}

}  // namespace oie
