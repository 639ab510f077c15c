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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "oie/oie.hpp"

namespace oie::testing {

inline std::string data_path(std::string_view name) {
  return std::string(OIE_TEST_DATA_DIR) + "/" + std::string(name);
}

inline std::string read_file(std::string_view name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Corpus load_corpus(std::string_view name) {
  return parse_conllu(std::string_view(read_file(name)), std::string(name));
}

inline std::vector<GoldRecord> load_gold(std::string_view name) {
  std::istringstream in(read_file(name));
  return read_gold_jsonl(in);
}

inline const SentenceGraph& find_sentence(const Corpus& corpus, std::string_view id) {
  for (const SentenceGraph& s : corpus.sentences) {
    if (s.sentence_id() == id) return s;
  }
  throw std::runtime_error("no sentence " + std::string(id));
}

// (surface, upos, head, deprel); lemma = lower-cased surface unless written
// as "surface|lemma".
using Row = std::tuple<std::string, std::string, TokenIndex, std::string>;

inline SentenceGraph make_graph(const std::vector<Row>& rows, std::string id = "t") {
  std::vector<Token> tokens;
  std::string text;
  TokenIndex i = 0;
  for (const auto& [surface, upos, head, deprel] : rows) {
    Token t;
    t.index = ++i;
    const auto bar = surface.find('|');
    t.surface = surface.substr(0, bar);
    t.lemma = bar == std::string::npos ? to_lower(surface) : surface.substr(bar + 1);
    t.upos = parse_upos(upos).value();
    t.head = head;
    t.deprel = deprel;
    if (!text.empty()) text += ' ';
    text += t.surface;
    tokens.push_back(std::move(t));
  }
  return SentenceGraph(std::move(id), std::move(text), std::move(tokens));
}

// Index of the first token with this surface form.
inline TokenIndex index_of(const SentenceGraph& g, std::string_view surface) {
  for (const Token& t : g.tokens()) {
    if (t.surface == surface) return t.index;
  }
  throw std::runtime_error("no token " + std::string(surface));
}

inline std::vector<std::string> rendered(const std::vector<PhraseSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.push_back(s.rendered);
  return out;
}

}  // namespace oie::testing
