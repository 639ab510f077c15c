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
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oie/token.hpp"

namespace oie {

// Raised when a token list does not form a single-rooted dependency tree.
class InvalidSentence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One dependency-parsed sentence. Immutable after construction; the
// constructor validates the tree and derives the child adjacency.
class SentenceGraph {
 public:
  SentenceGraph(std::string sentence_id, std::string text, std::vector<Token> tokens)
      : sentence_id_(std::move(sentence_id)),
        text_(std::move(text)),
        tokens_(std::move(tokens)),
        children_(tokens_.size() + 1) {
    const auto count = static_cast<TokenIndex>(tokens_.size());
    if (count == 0) throw InvalidSentence("sentence has no tokens");
    int roots = 0;
    for (TokenIndex i = 1; i <= count; ++i) {
      const Token& t = tokens_[i - 1];
      if (t.index != i) {
        throw InvalidSentence("token ids must run 1.." + std::to_string(count) +
                              ", found " + std::to_string(t.index) + " at position " +
                              std::to_string(i));
      }
      if (t.head < 0 || t.head > count) {
        throw InvalidSentence("token " + std::to_string(i) + " has head " +
                              std::to_string(t.head) + " outside the sentence");
      }
      if (t.head == i) {
        throw InvalidSentence("token " + std::to_string(i) + " is its own head");
      }
      if (t.head == 0) {
        ++roots;
        root_ = i;
      }
      children_[t.head].push_back(i);
    }
    if (roots != 1) {
      throw InvalidSentence("expected exactly one root, found " + std::to_string(roots));
    }
    // Every walk towards the root must terminate within `count` steps.
    for (TokenIndex i = 1; i <= count; ++i) {
      TokenIndex cur = i;
      for (TokenIndex steps = 0; cur != 0; ++steps) {
        if (steps > count) {
          throw InvalidSentence("head links form a cycle through token " + std::to_string(i));
        }
        cur = tokens_[cur - 1].head;
      }
    }
  }

  const std::string& sentence_id() const { return sentence_id_; }
  const std::string& text() const { return text_; }
  std::span<const Token> tokens() const { return tokens_; }
  TokenIndex size() const { return static_cast<TokenIndex>(tokens_.size()); }
  TokenIndex root() const { return root_; }

  bool contains(TokenIndex i) const { return i >= 1 && i <= size(); }
  const Token& token(TokenIndex i) const { return tokens_.at(static_cast<std::size_t>(i - 1)); }

  // Dependents of `i` in surface order; `children(0)` holds the root.
  std::span<const TokenIndex> children(TokenIndex i) const {
    return children_.at(static_cast<std::size_t>(i));
  }

  // First dependent of `head` whose label or base label equals `deprel`.
  std::optional<TokenIndex> first_child(TokenIndex head, std::string_view deprel) const {
    for (TokenIndex c : children(head)) {
      const std::string& label = token(c).deprel;
      if (label == deprel || base_label(label) == deprel) return c;
    }
    return std::nullopt;
  }

  // True when `node` equals `ancestor` or lies below it.
  bool dominates(TokenIndex ancestor, TokenIndex node) const {
    for (TokenIndex steps = 0; node != 0 && steps <= size(); ++steps) {
      if (node == ancestor) return true;
      node = token(node).head;
    }
    return false;
  }

 private:
  std::string sentence_id_;
  std::string text_;
  std::vector<Token> tokens_;
  std::vector<std::vector<TokenIndex>> children_;
  TokenIndex root_ = 0;
};

// A set of tokens rendered in surface order, with a designated head.
struct PhraseSpan {
  std::vector<TokenIndex> token_indices;
  TokenIndex head_index = 0;
  std::string rendered;

  TokenIndex front() const { return token_indices.front(); }
  TokenIndex back() const { return token_indices.back(); }
  bool contains(TokenIndex i) const {
    return std::binary_search(token_indices.begin(), token_indices.end(), i);
  }

  friend bool operator==(const PhraseSpan&, const PhraseSpan&) = default;
};

inline std::string render_tokens(const SentenceGraph& graph, std::span<const TokenIndex> indices) {
  std::string out;
  for (TokenIndex i : indices) {
    if (!out.empty()) out += ' ';
    out += graph.token(i).surface;
  }
  return out;
}

// Builds a span from arbitrary indices: sorts, dedups, renders. `head` must be
// one of the indices.
inline PhraseSpan make_span(const SentenceGraph& graph, std::vector<TokenIndex> indices,
                            TokenIndex head) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  PhraseSpan span;
  span.rendered = render_tokens(graph, indices);
  span.token_indices = std::move(indices);
  span.head_index = head;
  return span;
}

// Dependency labels. A bare label also matches its subtypes, so {"nsubj"}
// covers "nsubj:pass" and {"acl"} covers "acl:relcl".
using LabelSet = std::set<std::string, std::less<>>;

inline bool label_in(const LabelSet& labels, std::string_view deprel) {
  return labels.contains(deprel) || labels.contains(base_label(deprel));
}

// Collects `root` plus every descendant reachable through children accepted
// by `keep`. A rejected child prunes its whole subtree.
template <typename KeepChild>
std::vector<TokenIndex> collect_subtree(const SentenceGraph& graph, TokenIndex root,
                                        KeepChild&& keep) {
  std::vector<TokenIndex> out;
  std::vector<TokenIndex> stack{root};
  while (!stack.empty()) {
    TokenIndex cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (TokenIndex c : graph.children(cur)) {
      if (keep(cur, c)) stack.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline PhraseSpan subtree_yield(const SentenceGraph& graph, TokenIndex root_index,
                                const LabelSet& exclusions = {}) {
  auto indices = collect_subtree(graph, root_index, [&](TokenIndex, TokenIndex child) {
    return !label_in(exclusions, graph.token(child).deprel);
  });
  return make_span(graph, std::move(indices), root_index);
}

namespace detail {

// Relations that keep a dependent inside a base noun phrase.
inline bool is_chunk_internal(std::string_view deprel, bool at_head) {
  const std::string_view base = base_label(deprel);
  if (base == "det" || base == "flat" || base == "fixed" || base == "goeswith") return true;
  if (deprel == "amod" || deprel == "nummod" || deprel == "compound" ||
      deprel == "nmod:poss") {
    return true;
  }
  // The head's own preposition belongs to the enclosing phrase; deeper case
  // markers ("today 's") stay.
  return !at_head && deprel == "case";
}

}  // namespace detail

// Base noun phrases derived from the dependency tree. Every nominal token
// heads a candidate covering its determiners, modifiers, compounds and
// possessors; candidates nested inside another candidate are dropped, so the
// result is disjoint and sorted by first token.
inline std::vector<PhraseSpan> noun_phrase_chunks(const SentenceGraph& graph) {
  std::vector<std::vector<TokenIndex>> candidates(graph.size() + 1);
  for (TokenIndex i = 1; i <= graph.size(); ++i) {
    if (!is_nominal(graph.token(i).upos)) continue;
    candidates[i] = collect_subtree(graph, i, [&](TokenIndex parent, TokenIndex child) {
      return detail::is_chunk_internal(graph.token(child).deprel, parent == i);
    });
  }
  std::vector<PhraseSpan> chunks;
  for (TokenIndex i = 1; i <= graph.size(); ++i) {
    if (candidates[i].empty()) continue;
    bool nested = false;
    for (TokenIndex j = 1; j <= graph.size() && !nested; ++j) {
      if (j != i && !candidates[j].empty() &&
          std::binary_search(candidates[j].begin(), candidates[j].end(), i)) {
        nested = true;
      }
    }
    if (!nested) chunks.push_back(make_span(graph, candidates[i], i));
  }
  std::sort(chunks.begin(), chunks.end(),
            [](const PhraseSpan& a, const PhraseSpan& b) { return a.front() < b.front(); });
  return chunks;
}

}  // namespace oie
