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

// CoNLL-U reading and writing.
//
// Format errors (wrong column count, non-integer ID or HEAD) abort the read
// with a ConlluError naming the line. Tree errors (cycles, several roots,
// unknown UPOS, duplicate sentence ids) only reject the sentence concerned;
// the reader reports them and moves on.

#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "oie/sentence_graph.hpp"

namespace oie {

class ConlluError : public std::runtime_error {
 public:
  ConlluError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A sentence rejected by tree validation.
struct SentenceError {
  std::string sentence_id;
  std::size_t first_line = 0;
  std::string message;
};

struct Corpus {
  std::string source;
  std::vector<SentenceGraph> sentences;
  std::vector<SentenceError> errors;
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

inline std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

// "# key = value" -> value when the key matches.
inline std::optional<std::string> comment_value(std::string_view comment, std::string_view key) {
  std::string_view body = trim(comment.substr(1));
  if (body.substr(0, key.size()) != key) return std::nullopt;
  body = trim(body.substr(key.size()));
  if (body.empty() || body.front() != '=') return std::nullopt;
  return std::string(trim(body.substr(1)));
}

}  // namespace detail

// Pulls one sentence at a time from a stream, so memory stays bounded by the
// largest sentence.
class ConlluReader {
 public:
  using Item = std::variant<SentenceGraph, SentenceError>;

  explicit ConlluReader(std::istream& in) : in_(in) {}

  // Next sentence or sentence-level error; nullopt at end of input.
  std::optional<Item> next() {
    Block block;
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (detail::trim(line).empty()) {
        if (!block.rows.empty()) return finish(std::move(block));
        block = Block{};
        continue;
      }
      if (block.first_line == 0) block.first_line = line_number_;
      if (line.front() == '#') {
        if (auto id = detail::comment_value(line, "sent_id")) block.sentence_id = *id;
        if (auto text = detail::comment_value(line, "text")) block.text = *text;
        continue;
      }
      add_row(block, line);
    }
    if (!block.rows.empty()) return finish(std::move(block));
    return std::nullopt;
  }

 private:
  struct Block {
    std::size_t first_line = 0;
    std::optional<std::string> sentence_id;
    std::optional<std::string> text;
    std::vector<Token> rows;
    std::optional<std::string> problem;
  };

  void add_row(Block& block, std::string_view line) {
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 10) {
      throw ConlluError(line_number_, "expected 10 tab-separated fields, found " +
                                          std::to_string(fields.size()));
    }
    // Multiword ranges ("3-4") and empty nodes ("5.1") carry no tree edges.
    if (fields[0].find_first_of("-.") != std::string_view::npos) return;
    const auto id = detail::parse_int(fields[0]);
    if (!id) throw ConlluError(line_number_, "non-integer ID '" + std::string(fields[0]) + "'");
    const auto head = detail::parse_int(fields[6]);
    if (!head) {
      throw ConlluError(line_number_, "non-integer HEAD '" + std::string(fields[6]) + "'");
    }
    Token token;
    token.index = *id;
    token.surface = std::string(fields[1]);
    token.lemma = std::string(fields[2]);
    token.head = *head;
    token.deprel = normalize_deprel(fields[7]);
    if (auto upos = parse_upos(fields[3])) {
      token.upos = *upos;
    } else if (!block.problem) {
      block.problem = "line " + std::to_string(line_number_) + ": unknown UPOS '" +
                      std::string(fields[3]) + "'";
    }
    block.rows.push_back(std::move(token));
  }

  Item finish(Block block) {
    ++ordinal_;
    std::string id = block.sentence_id.value_or("s" + std::to_string(ordinal_));
    auto reject = [&](std::string message) -> Item {
      return SentenceError{id, block.first_line, std::move(message)};
    };
    if (block.problem) return reject(*block.problem);
    if (!seen_ids_.insert(id).second) return reject("duplicate sentence id '" + id + "'");
    std::string text;
    if (block.text) {
      text = *block.text;
    } else {
      for (const Token& t : block.rows) {
        if (!text.empty()) text += ' ';
        text += t.surface;
      }
    }
    try {
      return SentenceGraph(id, std::move(text), std::move(block.rows));
    } catch (const InvalidSentence& e) {
      return reject(e.what());
    }
  }

  std::istream& in_;
  std::size_t line_number_ = 0;
  std::size_t ordinal_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

inline Corpus parse_conllu(std::istream& in, std::string source = "<stream>") {
  Corpus corpus;
  corpus.source = std::move(source);
  ConlluReader reader(in);
  while (auto item = reader.next()) {
    if (auto* graph = std::get_if<SentenceGraph>(&*item)) {
      corpus.sentences.push_back(std::move(*graph));
    } else {
      corpus.errors.push_back(std::get<SentenceError>(std::move(*item)));
    }
  }
  return corpus;
}

inline Corpus parse_conllu(std::string_view text, std::string source = "<string>") {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, std::move(source));
}

inline void write_conllu(std::ostream& out, const SentenceGraph& graph) {
  out << "# sent_id = " << graph.sentence_id() << "\n";
  out << "# text = " << graph.text() << "\n";
  auto field = [](const std::string& s) -> const std::string& {
    static const std::string kEmpty = "_";
    return s.empty() ? kEmpty : s;
  };
  for (const Token& t : graph.tokens()) {
    out << t.index << '\t' << field(t.surface) << '\t' << field(t.lemma) << '\t'
        << to_string(t.upos) << "\t_\t_\t" << t.head << '\t' << field(t.deprel) << "\t_\t_\n";
  }
  out << "\n";
}

}  // namespace oie
