// Copyright 2026 The Anafor Authors.
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

#include "anafor/resolver.h"

#include <random>
#include <vector>

#include "anafor/annotation_io.h"
#include "gtest/gtest.h"
#include "random_docs.h"
#include "test_util.h"

namespace anafor {
namespace {

using testing::ExampleNames;

std::vector<NameSet> Antecedents(const ResolvedDocument &r) {
  std::vector<NameSet> out;
  for (const auto &res : r.resolutions) out.push_back(res.antecedent());
  return out;
}

TEST(SelectTest, MostSalientBreaksTiesByAnchor) {
  const std::vector<double> scores = {5.0, 7.0, 7.0, 1.0};
  const std::vector<std::size_t> anchors = {0, 3, 9, 12};
  EXPECT_EQ(SelectMostSalient(scores, anchors), 2u);
  const std::vector<double> near_tie = {7.0, 7.0 * (1 + 1e-12)};
  const std::vector<std::size_t> rev = {5, 2};
  EXPECT_EQ(SelectMostSalient(near_tie, rev), 0u);
  const std::vector<std::size_t> same = {4, 4};
  const std::vector<double> eq = {1.0, 1.0};
  EXPECT_EQ(SelectMostSalient(eq, same), 1u);
}

TEST(SelectTest, MostRecent) {
  const std::vector<std::size_t> anchors = {3, 8, 8, 1};
  EXPECT_EQ(SelectMostRecent(anchors), 2u);
}

TEST(ResolveTest, WorkedExamples) {
  struct Case {
    const char *file;
    std::vector<NameSet> expected;  // empty set = ambiguous
  };
  const Case cases[] = {
      {"examples/constraint_reflexive.txt", {{"Ali"}}},
      {"examples/constraint_personal.txt", {{}}},
      {"examples/pref_quoted.txt", {{"Ayşe"}}},
      {"examples/pref_recency.txt", {{"Murat"}}},
      {"examples/pref_nominative.txt", {{"Murat"}}},
      {"examples/pref_first_np.txt", {{"Ahmet"}}},
      {"examples/pref_predicate.txt", {{"Ali"}}},
      {"examples/pref_repetition.txt", {{"Ayşe"}, {"Ayşe"}}},
      {"examples/pref_punctuation.txt", {{"Tekin"}}},
      {"examples/pref_zero_history.txt", {{"Ali"}, {"Ali"}, {"Ali"}}},
  };
  for (const auto &c : cases) {
    const Document doc = ParseDocument(testing::ReadData(c.file));
    EXPECT_EQ(Antecedents(ResolveDocument(doc, ExampleNames())), c.expected)
        << c.file;
  }
}

TEST(ResolveTest, NumberAgreementExampleScores) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/constraint_number.txt"));
  const ResolvedDocument r = ResolveDocument(doc, ExampleNames());
  ASSERT_EQ(r.resolutions.size(), 3u);
  EXPECT_EQ(r.resolutions[0].antecedent(), NameSet{"Ayşe"});
  EXPECT_EQ(r.resolutions[1].antecedent(), (NameSet{"Ahmet", "Fatma"}));
  // Third pronoun: the sentence-initial member of the compound outscores
  // the earlier Ayşe (see "Known limitations" in the README).
  EXPECT_EQ(r.resolutions[2].antecedent(), NameSet{"Ahmet"});
  EXPECT_NEAR(r.resolutions[2].selected().score, 8.80, 1e-9);
}

TEST(ResolveTest, PreferenceScoresFromExamples) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/pref_quoted.txt"));
  const Resolution r = ResolveDocument(doc, ExampleNames()).resolutions[0];
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_NEAR(r.trace[0].score, 4.35, 1e-9);
  EXPECT_NEAR(r.trace[1].score, 4.00, 1e-9);
}

TEST(ResolveTest, ParaphraseReplacesPronouns) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/constraint_number.txt"));
  EXPECT_EQ(SerializeDocument(ResolveDocument(doc, ExampleNames()).paraphrased),
            "Ayşe okula gitti. Ahmet ve Fatma Ayşe gördü. Ahmet ve Fatma "
            "Ahmet el salladılar.\n");
}

TEST(ResolveTest, AmbiguousKeepsTag) {
  const Document doc = ParseDocument("Ayşe <pro id=\"1\">onu</pro> gördü.");
  const ResolvedDocument r = ResolveDocument(doc, ExampleNames());
  EXPECT_TRUE(r.resolutions[0].ambiguous());
  EXPECT_EQ(SerializeDocument(r.paraphrased), SerializeDocument(doc));
}

TEST(ResolveTest, EmptyDictionaryIsAllAmbiguous) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/pref_zero_history.txt"));
  for (const auto &r : ResolveDocument(doc, NameDictionary{}).resolutions) {
    EXPECT_TRUE(r.ambiguous());
  }
}

TEST(ResolveTest, ScopeBoundary) {
  const Document three = ParseDocument(testing::ReadData("scope/three_back.txt"));
  const Document four = ParseDocument(testing::ReadData("scope/four_back.txt"));
  EXPECT_EQ(ResolveDocument(three, ExampleNames()).resolutions[0].antecedent(),
            NameSet{"Murat"});
  EXPECT_TRUE(ResolveDocument(four, ExampleNames()).resolutions[0].ambiguous());
  ResolverOptions wide;
  wide.scope.max_back_sentences = 4;
  EXPECT_FALSE(
      ResolveDocument(four, ExampleNames(), wide).resolutions[0].ambiguous());
}

TEST(BaselineTest, PicksMostRecentSurvivor) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/pref_first_np.txt"));
  const ResolvedDocument r = BaselineResolveDocument(doc, ExampleNames());
  EXPECT_EQ(r.resolutions[0].antecedent(), NameSet{"Ali"});
  EXPECT_FALSE(r.resolutions[0].trace[0].features.has_value());
}

TEST(BaselineTest, PunctuationExample) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/pref_punctuation.txt"));
  EXPECT_EQ(BaselineResolveDocument(doc, ExampleNames())
                .resolutions[0]
                .antecedent(),
            NameSet{"Ali"});
}

TEST(ResolvePropertyTest, ScalingWeightsKeepsChoices) {
  testing::RandomDocGenerator gen(99);
  const NameDictionary dict = testing::RandomDocGenerator::Names();
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const Document doc = gen.Next();
    ResolverOptions scaled;
    scaled.weights = PreferenceWeights::Defaults() * factor(rng);
    ASSERT_EQ(Antecedents(ResolveDocument(doc, dict)),
              Antecedents(ResolveDocument(doc, dict, scaled)))
        << SerializeDocument(doc);
  }
}

TEST(ResolvePropertyTest, ZeroWeightsReduceToBaseline) {
  testing::RandomDocGenerator gen(100);
  const NameDictionary dict = testing::RandomDocGenerator::Names();
  ResolverOptions zero;
  zero.weights = PreferenceWeights::Uniform(0.0);
  for (int i = 0; i < 1000; ++i) {
    const Document doc = gen.Next();
    const ResolvedDocument a = ResolveDocument(doc, dict, zero);
    const ResolvedDocument b = BaselineResolveDocument(doc, dict, zero);
    ASSERT_EQ(Antecedents(a), Antecedents(b)) << SerializeDocument(doc);
    ASSERT_EQ(a.paraphrased, b.paraphrased);
  }
}

TEST(ResolvePropertyTest, Deterministic) {
  testing::RandomDocGenerator gen(101);
  const NameDictionary dict = testing::RandomDocGenerator::Names();
  for (int i = 0; i < 200; ++i) {
    const Document doc = gen.Next();
    const ResolvedDocument a = ResolveDocument(doc, dict);
    const ResolvedDocument b = ResolveDocument(doc, dict);
    ASSERT_EQ(FormatTrace(a.resolutions), FormatTrace(b.resolutions));
    ASSERT_EQ(SerializeDocument(a.paraphrased), SerializeDocument(b.paraphrased));
  }
}

TEST(ResolvePropertyTest, ChosenIsASurvivorAndMaximal) {
  testing::RandomDocGenerator gen(102);
  const NameDictionary dict = testing::RandomDocGenerator::Names();
  for (int i = 0; i < 1000; ++i) {
    const Document doc = gen.Next();
    for (const auto &r : ResolveDocument(doc, dict).resolutions) {
      if (r.ambiguous()) {
        ASSERT_TRUE(r.trace.empty());
        continue;
      }
      for (const auto &sc : r.trace) {
        ASSERT_LE(sc.score, r.selected().score + 1e-9);
      }
    }
  }
}

TEST(TraceTest, FormatAndParse) {
  const Document doc =
      ParseDocument(testing::ReadData("examples/pref_first_np.txt"));
  const ResolvedDocument r = ResolveDocument(doc, ExampleNames());
  const std::string trace = FormatTrace(r.resolutions);
  EXPECT_EQ(trace,
            "# id\toutcome\tantecedent\tscore\tcandidates\n"
            "1\tresolved\tAhmet\t7.6000\t*Ahmet@0:11110000=7.6000,"
            "Ali@1:11000000=4.3500\n");
  const auto records = ParseTrace(trace);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].pronoun_id, 1);
  EXPECT_TRUE(records[0].resolved);
  EXPECT_EQ(records[0].antecedent, NameSet{"Ahmet"});
  EXPECT_EQ(records, ToRecords(r.resolutions));
}

TEST(TraceTest, AmbiguousLine) {
  const Document doc = ParseDocument("Ayşe <pro id=\"4\">onu</pro> gördü.");
  const ResolvedDocument r = ResolveDocument(doc, ExampleNames());
  EXPECT_EQ(FormatTraceLine(r.resolutions[0]), "4\tambiguous\t-\t-\t-");
  const auto records = ParseTrace(FormatTrace(r.resolutions));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].resolved);
}

TEST(TraceTest, ParseErrors) {
  EXPECT_THROW(ParseTrace("1\tresolved\n"), TraceError);
  EXPECT_THROW(ParseTrace("x\tresolved\tAli\t1\t-\n"), TraceError);
  EXPECT_THROW(ParseTrace("1\tmaybe\tAli\t1\t-\n"), TraceError);
  EXPECT_THROW(ParseTrace("1\tresolved\t-\t1\t-\n"), TraceError);
  EXPECT_TRUE(ParseTrace("").empty());
}

TEST(ReplacementTest, CompoundJoinsWithVe) {
  const Document doc = ParseDocument(
      "Ali ile Ayşe geldi. <pro id=\"1\">Onlar</pro> oturdu.");
  const ResolvedDocument r = ResolveDocument(doc, ExampleNames());
  EXPECT_EQ(ReplacementTokens(r.resolutions[0].selected().candidate),
            (std::vector<std::string>{"Ali", "ve", "Ayşe"}));
}

}  // namespace
}  // namespace anafor
