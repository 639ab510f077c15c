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

// Clause-based extraction.
//
// One clause is built per subject dependency. Its constituents (subject,
// verb, objects, complement, adverbials) are read off the governor's
// dependents, a decision tree assigns one of the seven clause types, and the
// type's pattern generates n-ary propositions:
//
//   SV    Albert Einstein died in Princeton in 1955.
//   SVA   Albert Einstein remained in Princeton until his death.
//   SVC   Albert Einstein is a scientist of the 20th century.
//   SVO   Albert Einstein has won the Nobel Prize in 1921.
//   SVOO  RSAS gave Albert Einstein the Nobel Prize.
//   SVOA  The doorman showed Albert Einstein to his office.
//   SVOC  Albert Einstein declared the meeting open.

#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oie/extraction_record.hpp"
#include "oie/lexicon.hpp"
#include "oie/sentence_graph.hpp"

namespace oie {

struct Adverbial {
  PhraseSpan span;  // includes the preposition
  PhraseSpan bare;  // span without the preposition
  std::optional<Preposition> preposition;
  bool obligatory = false;
};

struct Clause {
  std::string sentence_id;
  PhraseSpan subject;
  PhraseSpan verb_group;  // head_index is the main verb, or the copula
  std::string verb_lemma;
  bool copular = false;
  std::optional<PhraseSpan> indirect_object;
  std::optional<PhraseSpan> direct_object;
  std::optional<PhraseSpan> complement;
  std::vector<Adverbial> adverbials;  // surface order
  std::optional<ClauseType> clause_type;
};

struct VerbLists {
  WordSet copular_verbs = {"be",   "seem",  "appear", "become", "remain", "stay",
                           "look", "sound", "feel",   "taste",  "smell"};
  WordSet adverbial_requiring_verbs = {"be",   "remain", "stay", "live", "reside", "put",
                                       "place", "show",  "lead", "go",   "come"};
  WordSet complement_taking_object_verbs = {"declare",  "make",  "name",    "call",
                                            "consider", "elect", "appoint", "find"};
};

// Sections "[copular]", "[adverbial_requiring]" and "[object_complement]",
// one lemma per line. A section present in the file replaces that list's
// defaults; absent sections keep them.
inline VerbLists read_verb_lists(std::istream& in) {
  VerbLists lists;
  WordSet* current = nullptr;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string entry = to_lower(std::string_view(line).substr(first, last - first + 1));
    if (entry.front() == '[') {
      if (entry == "[copular]") {
        current = &lists.copular_verbs;
      } else if (entry == "[adverbial_requiring]") {
        current = &lists.adverbial_requiring_verbs;
      } else if (entry == "[object_complement]") {
        current = &lists.complement_taking_object_verbs;
      } else {
        throw std::runtime_error("verb lists line " + std::to_string(number) +
                                 ": unknown section " + entry);
      }
      current->clear();
      continue;
    }
    if (!current) {
      throw std::runtime_error("verb lists line " + std::to_string(number) +
                               ": entry before any section header");
    }
    current->insert(entry);
  }
  return lists;
}

struct Proposition {
  std::string sentence_id;
  PhraseSpan subject;
  Relation relation;
  std::vector<Argument> args;
  std::string pattern;  // "SVA", "SVAA", ...
  ClauseType clause_type = ClauseType::kSV;
};

namespace detail {

// Dependents that never belong to a subject, object or adverbial phrase.
inline const LabelSet& constituent_exclusions() {
  static const LabelSet kLabels = {"punct", "acl:relcl", "parataxis"};
  return kLabels;
}

inline std::vector<TokenIndex> constituent_tokens(const SentenceGraph& g, TokenIndex root) {
  return collect_subtree(g, root, [&](TokenIndex, TokenIndex child) {
    return !label_in(constituent_exclusions(), g.token(child).deprel);
  });
}

inline bool is_subject_label(std::string_view deprel) {
  const std::string_view base = base_label(deprel);
  return base == "nsubj" || base == "csubj";
}

inline bool is_negation(const Token& t) {
  return t.upos == Upos::kPart && t.deprel == "advmod";
}

inline bool is_adverbial_label(std::string_view deprel) {
  return base_label(deprel) == "obl" || deprel == "advmod" || deprel == "nmod:tmod" ||
         deprel == "nmod:npmod";
}

inline std::string lemma_of(const Token& t) {
  return to_lower(t.lemma.empty() || t.lemma == "_" ? t.surface : t.lemma);
}

}  // namespace detail

inline std::vector<Clause> detect_clauses(const SentenceGraph& sentence) {
  std::vector<Clause> clauses;
  for (TokenIndex s = 1; s <= sentence.size(); ++s) {
    const Token& subj = sentence.token(s);
    if (!detail::is_subject_label(subj.deprel) || subj.head == 0) continue;
    if (subj.deprel == "expl" || to_lower(subj.surface) == "there") continue;
    const TokenIndex gov = subj.head;

    // Parser noise: with several subjects on one governor the first wins.
    bool first = true;
    for (TokenIndex c : sentence.children(gov)) {
      const Token& other = sentence.token(c);
      if (c >= s) break;
      if (detail::is_subject_label(other.deprel) && to_lower(other.surface) != "there") {
        first = false;
        break;
      }
    }
    if (!first) continue;

    Clause clause;
    clause.sentence_id = sentence.sentence_id();
    clause.subject = make_span(sentence, detail::constituent_tokens(sentence, s), s);

    const auto cop = sentence.first_child(gov, "cop");
    clause.copular = cop.has_value();
    const TokenIndex verb = cop.value_or(gov);
    clause.verb_lemma = detail::lemma_of(sentence.token(verb));
    std::vector<TokenIndex> verb_tokens{verb};
    for (TokenIndex c : sentence.children(gov)) {
      const Token& t = sentence.token(c);
      if (base_label(t.deprel) == "aux" || detail::is_negation(t)) verb_tokens.push_back(c);
    }
    clause.verb_group = make_span(sentence, verb_tokens, verb);

    auto obj = sentence.first_child(gov, "obj");
    auto iobj = sentence.first_child(gov, "iobj");
    if (iobj && !obj) std::swap(obj, iobj);
    if (obj) {
      clause.direct_object = make_span(sentence, detail::constituent_tokens(sentence, *obj), *obj);
    }
    if (iobj) {
      clause.indirect_object =
          make_span(sentence, detail::constituent_tokens(sentence, *iobj), *iobj);
    }

    std::vector<TokenIndex> adverbial_heads;
    for (TokenIndex c : sentence.children(gov)) {
      const Token& t = sentence.token(c);
      if (!detail::is_adverbial_label(t.deprel) || detail::is_negation(t)) continue;
      // Pre-head modifiers of a predicate nominal stay in the complement.
      if (clause.copular && t.deprel == "advmod" && c < gov) continue;
      adverbial_heads.push_back(c);
    }

    if (clause.copular) {
      static const LabelSet kClauseLevel = {"nsubj", "csubj", "cop",   "aux",
                                            "mark",  "advcl", "punct", "ccomp",
                                            "parataxis", "expl", "acl:relcl", "obj", "iobj"};
      auto tokens = collect_subtree(sentence, gov, [&](TokenIndex parent, TokenIndex child) {
        const std::string& label = sentence.token(child).deprel;
        if (parent != gov) return !label_in(detail::constituent_exclusions(), label);
        if (label_in(kClauseLevel, label) || detail::is_negation(sentence.token(child))) {
          return false;
        }
        return std::find(adverbial_heads.begin(), adverbial_heads.end(), child) ==
               adverbial_heads.end();
      });
      clause.complement = make_span(sentence, std::move(tokens), gov);
    } else if (auto xcomp = sentence.first_child(gov, "xcomp")) {
      clause.complement =
          make_span(sentence, detail::constituent_tokens(sentence, *xcomp), *xcomp);
    }

    for (TokenIndex c : adverbial_heads) {
      Adverbial adv;
      auto tokens = detail::constituent_tokens(sentence, c);
      adv.span = make_span(sentence, tokens, c);
      for (TokenIndex cc : sentence.children(c)) {
        if (cc < c && sentence.token(cc).deprel == "case") {
          adv.preposition = Preposition{cc, sentence.token(cc).surface};
          std::erase(tokens, cc);
          break;
        }
      }
      adv.bare = make_span(sentence, std::move(tokens), c);
      clause.adverbials.push_back(std::move(adv));
    }
    std::sort(clause.adverbials.begin(), clause.adverbials.end(),
              [](const Adverbial& a, const Adverbial& b) { return a.span.front() < b.span.front(); });
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

// Assigns the clause type and marks the obligatory adverbial, if any.
// Checked in order:
//   1. complement, no direct object                        -> SVC
//   2. indirect object                                     -> SVOO
//   3. direct object: complement and object-complement verb -> SVOC
//                     adverbial-requiring verb + adverbial  -> SVOA
//                     otherwise                             -> SVO
//   4. no object:     adverbial-requiring verb + adverbial  -> SVA
//                     otherwise                             -> SV
inline ClauseType classify_clause(Clause& clause, const VerbLists& lists = {}) {
  for (Adverbial& a : clause.adverbials) a.obligatory = false;
  const bool wants_adverbial = lists.adverbial_requiring_verbs.contains(clause.verb_lemma) &&
                               !clause.adverbials.empty();
  ClauseType type;
  if (clause.complement && !clause.direct_object) {
    type = ClauseType::kSVC;
  } else if (clause.indirect_object) {
    type = ClauseType::kSVOO;
  } else if (clause.direct_object) {
    if (clause.complement &&
        lists.complement_taking_object_verbs.contains(clause.verb_lemma)) {
      type = ClauseType::kSVOC;
    } else if (wants_adverbial) {
      type = ClauseType::kSVOA;
    } else {
      type = ClauseType::kSVO;
    }
  } else {
    type = wants_adverbial ? ClauseType::kSVA : ClauseType::kSV;
  }
  if (type == ClauseType::kSVA || type == ClauseType::kSVOA) {
    clause.adverbials.front().obligatory = true;
  }
  clause.clause_type = type;
  return type;
}

namespace detail {

struct Slot {
  const PhraseSpan* span;
  const PhraseSpan* bare;  // set together with preposition
  const Preposition* preposition;
};

// Lays constituents out after the verb. The first slot's preposition joins
// the relation ("died in"). A later slot that precedes an earlier one in the
// sentence shows its preposition in brackets ("[in] Princeton"); slots still
// in sentence order keep it inline ("until his death").
inline Proposition build_proposition(const Clause& clause, const std::vector<const Slot*>& slots,
                                     std::string pattern) {
  Proposition p;
  p.sentence_id = clause.sentence_id;
  p.subject = clause.subject;
  p.relation.span = clause.verb_group;
  p.pattern = std::move(pattern);
  p.clause_type = *clause.clause_type;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    const Slot& slot = *slots[j];
    Argument arg;
    if (j == 0 && slot.preposition) {
      p.relation.preposition = *slot.preposition;
      arg.span = *slot.bare;
    } else {
      bool displaced = false;
      for (std::size_t i = 0; i < j; ++i) {
        if (slots[i]->span->front() > slot.span->front()) displaced = true;
      }
      if (displaced && slot.preposition) {
        arg.span = *slot.bare;
        arg.bracketed_preposition = slot.preposition->surface;
      } else {
        arg.span = *slot.span;
      }
    }
    p.args.push_back(std::move(arg));
  }
  return p;
}

}  // namespace detail

// Base pattern, then one proposition per optional adverbial, then, with two
// or more optional adverbials, one carrying all of them.
inline std::vector<Proposition> generate_propositions(const Clause& clause) {
  if (!clause.clause_type) throw std::invalid_argument("clause has not been classified");
  using detail::Slot;
  const ClauseType type = *clause.clause_type;

  std::vector<Slot> slots;
  auto add = [&](const PhraseSpan& span) { slots.push_back(Slot{&span, nullptr, nullptr}); };
  auto add_adverbial = [&](const Adverbial& a) {
    slots.push_back(Slot{&a.span, &a.bare, a.preposition ? &*a.preposition : nullptr});
  };
  const Adverbial* obligatory = nullptr;
  for (const Adverbial& a : clause.adverbials) {
    if (a.obligatory) obligatory = &a;
  }
  switch (type) {
    case ClauseType::kSV:
      break;
    case ClauseType::kSVA:
      add_adverbial(*obligatory);
      break;
    case ClauseType::kSVC:
      add(*clause.complement);
      break;
    case ClauseType::kSVO:
      add(*clause.direct_object);
      break;
    case ClauseType::kSVOO:
      add(*clause.indirect_object);
      add(*clause.direct_object);
      break;
    case ClauseType::kSVOA:
      add(*clause.direct_object);
      add_adverbial(*obligatory);
      break;
    case ClauseType::kSVOC:
      add(*clause.direct_object);
      add(*clause.complement);
      break;
  }
  const std::size_t required = slots.size();
  for (const Adverbial& a : clause.adverbials) {
    if (!a.obligatory) add_adverbial(a);
  }
  const std::size_t optional_count = slots.size() - required;

  std::vector<const Slot*> base;
  for (std::size_t i = 0; i < required; ++i) base.push_back(&slots[i]);
  const std::string name(to_string(type));

  std::vector<Proposition> out;
  out.push_back(detail::build_proposition(clause, base, name));
  for (std::size_t k = required; k < slots.size(); ++k) {
    auto with_one = base;
    with_one.push_back(&slots[k]);
    out.push_back(detail::build_proposition(clause, with_one, name + "A"));
  }
  if (optional_count >= 2) {
    std::vector<const Slot*> all = base;
    if (required == 0) {
      // Nothing obligatory follows the verb: the last adverbial leads.
      all.push_back(&slots.back());
      for (std::size_t k = required; k + 1 < slots.size(); ++k) all.push_back(&slots[k]);
    } else {
      for (std::size_t k = required; k < slots.size(); ++k) all.push_back(&slots[k]);
    }
    out.push_back(detail::build_proposition(clause, all,
                                            name + std::string(optional_count, 'A')));
  }
  return out;
}

inline std::vector<ExtractionRecord> link_triples(std::span<const Proposition> propositions) {
  std::vector<ExtractionRecord> records;
  for (const Proposition& p : propositions) {
    ExtractionRecord r;
    r.sentence_id = p.sentence_id;
    r.extractor = ExtractorId::kClause;
    r.arg1 = p.subject;
    r.rel = p.relation;
    if (!p.args.empty()) r.arg2 = p.args.front().span;
    for (std::size_t i = 1; i < p.args.size(); ++i) r.extra_args.push_back(p.args[i]);
    r.clause_type = p.clause_type;
    records.push_back(std::move(r));
  }
  return records;
}

inline std::vector<ExtractionRecord> extract_clauses(const SentenceGraph& sentence,
                                                     const VerbLists& lists = {}) {
  std::vector<ExtractionRecord> records;
  for (Clause& clause : detect_clauses(sentence)) {
    classify_clause(clause, lists);
    const auto props = generate_propositions(clause);
    auto linked = link_triples(props);
    records.insert(records.end(), std::make_move_iterator(linked.begin()),
                   std::make_move_iterator(linked.end()));
  }
  return records;
}

}  // namespace oie
