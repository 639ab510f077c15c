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

#include <gtest/gtest.h>

#include "oie/oie.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace oie {
namespace {

using testing::bfs_reachable;
using testing::find_sentence;
using testing::index_of;
using testing::load_corpus;
using testing::make_graph;

TEST(Upos, ParsesClosedSet) {
  for (const auto& [value, name] : kUposNames) {
    EXPECT_EQ(parse_upos(name), value);
    EXPECT_EQ(to_string(value), name);
  }
  EXPECT_FALSE(parse_upos("NN").has_value());
  EXPECT_FALSE(parse_upos("noun").has_value());
}

TEST(Deprel, StanfordAliasesMapToUd) {
  EXPECT_EQ(normalize_deprel("nsubjpass"), "nsubj:pass");
  EXPECT_EQ(normalize_deprel("dobj"), "obj");
  EXPECT_EQ(normalize_deprel("prt"), "compound:prt");
  EXPECT_EQ(normalize_deprel("NSUBJ"), "nsubj");
  EXPECT_EQ(normalize_deprel("obl:tmod"), "obl:tmod");
  EXPECT_EQ(base_label("acl:relcl"), "acl");
  EXPECT_EQ(base_label("obj"), "obj");
}

TEST(SentenceGraph, RejectsInvalidTrees) {
  using Rows = std::vector<testing::Row>;
  EXPECT_THROW(make_graph(Rows{}), InvalidSentence);
  EXPECT_THROW(make_graph({{"a", "NOUN", 0, "root"}, {"b", "NOUN", 0, "root"}}), InvalidSentence);
  EXPECT_THROW(make_graph({{"a", "NOUN", 2, "nmod"}, {"b", "NOUN", 1, "nmod"}}), InvalidSentence);
  EXPECT_THROW(make_graph({{"a", "NOUN", 0, "root"}, {"b", "NOUN", 2, "dep"}}), InvalidSentence);
  EXPECT_THROW(make_graph({{"a", "NOUN", 0, "root"}, {"b", "NOUN", 7, "dep"}}), InvalidSentence);
  EXPECT_THROW(make_graph({{"a", "NOUN", 0, "root"}, {"b", "NOUN", -1, "dep"}}), InvalidSentence);
  // Cycle detached from the root.
  EXPECT_THROW(make_graph({{"a", "VERB", 0, "root"},
                           {"b", "NOUN", 3, "dep"},
                           {"c", "NOUN", 2, "dep"}}),
               InvalidSentence);
}

TEST(SentenceGraph, ChildrenAndDominance) {
  const auto g = make_graph({{"Albert", "PROPN", 2, "compound"},
                             {"Einstein", "PROPN", 3, "nsubj"},
                             {"died", "VERB", 0, "root"},
                             {"in", "ADP", 5, "case"},
                             {"Princeton", "PROPN", 3, "obl"}});
  EXPECT_EQ(g.root(), 3);
  ASSERT_EQ(g.children(0).size(), 1u);
  EXPECT_EQ(g.children(0)[0], 3);
  EXPECT_EQ(std::vector<TokenIndex>(g.children(3).begin(), g.children(3).end()),
            (std::vector<TokenIndex>{2, 5}));
  EXPECT_EQ(g.first_child(5, "case"), 4);
  EXPECT_FALSE(g.first_child(3, "obj").has_value());
  EXPECT_TRUE(g.dominates(3, 1));
  EXPECT_TRUE(g.dominates(5, 5));
  EXPECT_FALSE(g.dominates(2, 4));
}

TEST(SubtreeYield, LeafYieldsItself) {
  const auto corpus = load_corpus("clause_types.conllu");
  const auto& g = find_sentence(corpus, "ct-sv");
  const auto span = subtree_yield(g, index_of(g, "Princeton"), {"case"});
  EXPECT_EQ(span.rendered, "Princeton");
  EXPECT_EQ(span.head_index, index_of(g, "Princeton"));
}

TEST(SubtreeYield, CompoundNameMatchesReachability) {
  const auto corpus = load_corpus("clause_types.conllu");
  const auto& g = find_sentence(corpus, "ct-sv");
  const TokenIndex root = index_of(g, "Einstein");
  const auto span = subtree_yield(g, root);
  EXPECT_EQ(span.rendered, "Albert Einstein");
  const auto oracle = bfs_reachable(g, root);
  EXPECT_EQ(std::set<TokenIndex>(span.token_indices.begin(), span.token_indices.end()), oracle);
}

TEST(SubtreeYield, ExclusionPrunesEmbeddedClause) {
  const auto corpus = load_corpus("guards.conllu");
  const auto& g = find_sentence(corpus, "g-incoherent");
  const TokenIndex thought = index_of(g, "thought");
  const TokenIndex began = index_of(g, "began");
  const auto span = subtree_yield(g, thought, {"ccomp"});
  const auto under_began = bfs_reachable(g, began);
  for (TokenIndex i : span.token_indices) EXPECT_FALSE(under_began.count(i)) << i;
  EXPECT_EQ(std::set<TokenIndex>(span.token_indices.begin(), span.token_indices.end()),
            bfs_reachable(g, thought, {"ccomp"}));
  EXPECT_EQ(span.rendered, "Peter thought");
}

TEST(NounPhraseChunks, EntityPairs) {
  const auto corpus = load_corpus("verb_phrase.conllu");
  EXPECT_EQ(testing::rendered(noun_phrase_chunks(find_sentence(corpus, "vp-award"))),
            (std::vector<std::string>{"Albert Einstein", "the Nobel Prize"}));
  EXPECT_EQ(testing::rendered(noun_phrase_chunks(find_sentence(corpus, "vp-apple"))),
            (std::vector<std::string>{"Apple Inc.", "California"}));
}

TEST(NounPhraseChunks, PunctuationOnlySentenceHasNone) {
  const auto g = make_graph({{"!", "PUNCT", 0, "root"}, {"?", "PUNCT", 1, "punct"}});
  EXPECT_TRUE(noun_phrase_chunks(g).empty());
}

TEST(NounPhraseChunks, AppositiveIsSeparateChunk) {
  const auto g = make_graph({{"Gates", "PROPN", 5, "nsubj"},
                             {",", "PUNCT", 3, "punct"},
                             {"founder", "NOUN", 1, "appos"},
                             {",", "PUNCT", 3, "punct"},
                             {"spoke", "VERB", 0, "root"}});
  EXPECT_EQ(testing::rendered(noun_phrase_chunks(g)),
            (std::vector<std::string>{"Gates", "founder"}));
}

TEST(NounPhraseChunks, PossessiveStaysInside) {
  const auto corpus = load_corpus("guards.conllu");
  const auto chunks = noun_phrase_chunks(find_sentence(corpus, "g-existential"));
  EXPECT_EQ(testing::rendered(chunks),
            (std::vector<std::string>{"today 's meeting", "there", "four CEOs"}));
}

TEST(PhraseSpan, MakeSpanSortsAndRenders) {
  const auto g = make_graph({{"a", "DET", 2, "det"}, {"b", "NOUN", 0, "root"}});
  const auto span = make_span(g, {2, 1, 2}, 2);
  EXPECT_EQ(span.token_indices, (std::vector<TokenIndex>{1, 2}));
  EXPECT_EQ(span.rendered, "a b");
  EXPECT_TRUE(span.contains(1));
  EXPECT_FALSE(span.contains(3));
}

}  // namespace
}  // namespace oie
