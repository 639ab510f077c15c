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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "oie/oie.hpp"
#include "support/fixtures.hpp"

namespace oie {
namespace {

constexpr std::string_view kTwo =
    "# sent_id = a\n"
    "# text = Runs fast.\n"
    "1\tRuns\trun\tVERB\t_\t_\t0\troot\t_\t_\n"
    "2\tfast\tfast\tADV\t_\t_\t1\tadvmod\t_\t_\n"
    "3\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n"
    "\n"
    "1\tGo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n";

TEST(ParseConllu, TwoSentences) {
  const Corpus corpus = parse_conllu(kTwo);
  ASSERT_EQ(corpus.sentences.size(), 2u);
  EXPECT_TRUE(corpus.errors.empty());
  EXPECT_EQ(corpus.sentences[0].sentence_id(), "a");
  EXPECT_EQ(corpus.sentences[0].text(), "Runs fast.");
  EXPECT_EQ(corpus.sentences[0].token(2).lemma, "fast");
  // No sent_id: ordinal id; no text: surfaces joined.
  EXPECT_EQ(corpus.sentences[1].sentence_id(), "s2");
  EXPECT_EQ(corpus.sentences[1].text(), "Go");
}

TEST(ParseConllu, NineColumnLineNamesLine) {
  const std::string bad =
      "# sent_id = a\n"
      "1\tRuns\trun\tVERB\t_\t_\t0\troot\t_\t_\n"
      "2\tfast\tfast\tADV\t_\t_\t1\tadvmod\t_\n";
  try {
    parse_conllu(std::string_view(bad));
    FAIL() << "expected ConlluError";
  } catch (const ConlluError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseConllu, NonIntegerHeadIsFormatError) {
  EXPECT_THROW(parse_conllu(std::string_view("1\ta\ta\tNOUN\t_\t_\tx\troot\t_\t_\n")),
               ConlluError);
}

TEST(ParseConllu, InvalidTreeSkipsSentenceAndContinues) {
  const std::string text =
      "# sent_id = bad\n"
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "2\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "\n"
      "# sent_id = cycle\n"
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "2\tb\tb\tNOUN\t_\t_\t3\tdep\t_\t_\n"
      "3\tc\tc\tNOUN\t_\t_\t2\tdep\t_\t_\n"
      "\n"
      "# sent_id = good\n"
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n";
  const Corpus corpus = parse_conllu(std::string_view(text));
  ASSERT_EQ(corpus.sentences.size(), 1u);
  EXPECT_EQ(corpus.sentences[0].sentence_id(), "good");
  ASSERT_EQ(corpus.errors.size(), 2u);
  EXPECT_EQ(corpus.errors[0].sentence_id, "bad");
  EXPECT_EQ(corpus.errors[0].first_line, 1u);
  EXPECT_EQ(corpus.errors[1].sentence_id, "cycle");
}

TEST(ParseConllu, UnknownUposIsSentenceError) {
  const Corpus corpus =
      parse_conllu(std::string_view("1\ta\ta\tNN\t_\t_\t0\troot\t_\t_\n"));
  EXPECT_TRUE(corpus.sentences.empty());
  EXPECT_EQ(corpus.errors.size(), 1u);
}

TEST(ParseConllu, DuplicateSentenceIdIsRejected) {
  const std::string text =
      "# sent_id = x\n1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
      "# sent_id = x\n1\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n";
  const Corpus corpus = parse_conllu(std::string_view(text));
  EXPECT_EQ(corpus.sentences.size(), 1u);
  EXPECT_EQ(corpus.errors.size(), 1u);
}

TEST(ParseConllu, SkipsRangeAndEmptyNodes) {
  const std::string text =
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3.1\tgo\tgo\tVERB\t_\t_\t_\t_\t_\t_\n";
  const Corpus corpus = parse_conllu(std::string_view(text));
  ASSERT_EQ(corpus.sentences.size(), 1u);
  EXPECT_EQ(corpus.sentences[0].size(), 3);
}

TEST(ParseConllu, StanfordLabelsAreNormalized) {
  const Corpus corpus = parse_conllu(std::string_view(
      "1\tit\tit\tPRON\t_\t_\t2\tnsubjpass\t_\t_\n2\tsold\tsell\tVERB\t_\t_\t0\tROOT\t_\t_\n"));
  ASSERT_EQ(corpus.sentences.size(), 1u);
  EXPECT_EQ(corpus.sentences[0].token(1).deprel, "nsubj:pass");
}

TEST(ParseConllu, RootOfDiedSentenceIsDied) {
  const auto corpus = testing::load_corpus("clause_types.conllu");
  const auto& g = testing::find_sentence(corpus, "ct-sv");
  EXPECT_EQ(g.token(g.root()).surface, "died");
}

TEST(ParseConllu, EmptyInput) {
  const Corpus corpus = parse_conllu(std::string_view(""));
  EXPECT_TRUE(corpus.sentences.empty());
  EXPECT_TRUE(corpus.errors.empty());
}

TEST(WriteConllu, RoundTripsFixtures) {
  for (const char* name : {"clause_types.conllu", "verb_phrase.conllu", "context.conllu", "guards.conllu"}) {
    const auto corpus = testing::load_corpus(name);
    std::ostringstream out;
    for (const auto& g : corpus.sentences) write_conllu(out, g);
    const auto again = parse_conllu(std::string_view(out.str()));
    ASSERT_EQ(again.sentences.size(), corpus.sentences.size()) << name;
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
      const auto& a = corpus.sentences[i];
      const auto& b = again.sentences[i];
      EXPECT_EQ(a.sentence_id(), b.sentence_id());
      EXPECT_EQ(a.text(), b.text());
      EXPECT_TRUE(std::equal(a.tokens().begin(), a.tokens().end(), b.tokens().begin(),
                             b.tokens().end()))
          << name << " " << a.sentence_id();
    }
  }
}

}  // namespace
}  // namespace oie
