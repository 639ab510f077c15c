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
#include <atomic>
#include <cstddef>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "oie/clause.hpp"
#include "oie/conllu.hpp"
#include "oie/context.hpp"
#include "oie/extraction_record.hpp"
#include "oie/verb_phrase.hpp"

namespace oie {

struct ExtractOptions {
  bool verb_phrase = true;
  bool clause = true;
  bool noun_rule = true;
  PatternLexicon lexicon;
  VerbLists verb_lists;
  WordSet attribution_verbs = default_attribution_verbs();
  WordSet markers = default_clause_markers();
  WordSet relational_nouns = default_relational_nouns();
  unsigned workers = 0;  // 0 = one per hardware thread
};

namespace detail {

inline int extractor_rank(ExtractorId id) {
  switch (id) {
    case ExtractorId::kVerbPhrase:
      return 0;
    case ExtractorId::kClause:
      return 1;
    case ExtractorId::kNounRule:
      return 2;
  }
  return 3;
}

}  // namespace detail

// All selected extractors and annotators over one sentence. Records that
// render identically (arguments, relation, extras, extractor) are emitted
// once; output is ordered by extractor, then relation start.
inline std::vector<ExtractionRecord> extract_sentence(const SentenceGraph& sentence,
                                                      const ExtractOptions& options) {
  std::vector<ExtractionRecord> records;
  auto append = [&](std::vector<ExtractionRecord> more) {
    records.insert(records.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
  };
  if (options.verb_phrase) append(extract_verb_phrase(sentence, options.lexicon));
  if (options.clause) append(extract_clauses(sentence, options.verb_lists));
  if (options.noun_rule) append(noun_mediated_rules(sentence, options.relational_nouns));

  records = annotate_attribution(sentence, std::move(records), options.attribution_verbs);
  records = annotate_clausal_modifier(sentence, std::move(records), options.markers);

  using Key = std::tuple<std::string, std::string, std::string, std::vector<std::string>, int>;
  std::set<Key> seen;
  std::erase_if(records, [&](const ExtractionRecord& r) {
    Key key{r.arg1.rendered, r.rel.text(), r.arg2_text(), r.extra_arg_texts(),
            detail::extractor_rank(r.extractor)};
    return !seen.insert(std::move(key)).second;
  });
  std::stable_sort(records.begin(), records.end(),
                   [](const ExtractionRecord& a, const ExtractionRecord& b) {
                     const int ra = detail::extractor_rank(a.extractor);
                     const int rb = detail::extractor_rank(b.extractor);
                     if (ra != rb) return ra < rb;
                     return a.rel.span.front() < b.rel.span.front();
                   });
  return records;
}

struct RunSummary {
  std::size_t sentences = 0;
  std::size_t rejected = 0;
};

// Streams sentences from `in`, extracting in parallel batches and handing
// records to `sink` in input order. Rejected sentences go to `on_error`.
// Memory is bounded by one batch of sentences.
inline RunSummary run_extract(
    std::istream& in, const ExtractOptions& options,
    const std::function<void(const ExtractionRecord&)>& sink,
    const std::function<void(const SentenceError&)>& on_error = {}) {
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  const std::size_t batch_size = std::size_t{4} * workers;

  RunSummary summary;
  ConlluReader reader(in);
  std::vector<SentenceGraph> batch;
  std::vector<std::vector<ExtractionRecord>> results;

  auto flush = [&] {
    results.assign(batch.size(), {});
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        results[i] = extract_sentence(batch[i], options);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      const unsigned n = std::min<std::size_t>(workers, batch.size());
      for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) {
            results[i] = extract_sentence(batch[i], options);
          }
        });
      }
    }
    // Sequence-numbered slots restore input order.
    for (const auto& sentence_records : results) {
      for (const ExtractionRecord& r : sentence_records) sink(r);
    }
    batch.clear();
  };

  while (auto item = reader.next()) {
    ++summary.sentences;
    if (auto* graph = std::get_if<SentenceGraph>(&*item)) {
      batch.push_back(std::move(*graph));
      if (batch.size() >= batch_size) flush();
    } else {
      // Earlier sentences are flushed first so diagnostics interleave in order.
      flush();
      ++summary.rejected;
      if (on_error) on_error(std::get<SentenceError>(*item));
    }
  }
  flush();
  return summary;
}

inline std::vector<ExtractionRecord> extract_corpus(const Corpus& corpus,
                                                    const ExtractOptions& options) {
  std::vector<ExtractionRecord> out;
  for (const SentenceGraph& s : corpus.sentences) {
    auto records = extract_sentence(s, options);
    out.insert(out.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  return out;
}

}  // namespace oie
