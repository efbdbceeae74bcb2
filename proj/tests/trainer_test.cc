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

#include "anafor/trainer.h"

#include <random>

#include "anafor/annotation_io.h"
#include "gtest/gtest.h"
#include "separable.h"
#include "test_util.h"

namespace anafor {
namespace {

std::size_t Errors(const std::vector<TrainingInstance> &set,
                   const PreferenceWeights &w) {
  std::size_t errors = 0;
  for (const auto &inst : set) errors += !inst.correct[Predict(inst, w)];
  return errors;
}

TEST(TrainTest, SeparableSetReachesZeroError) {
  const auto set = testing::SeparableSet(42, 50);
  ASSERT_EQ(set.size(), 50u);
  ASSERT_EQ(Errors(set, testing::HiddenWeights()), 0u);
  ASSERT_GT(Errors(set, PreferenceWeights::Uniform(1.0)), 0u);

  const TrainReport report = Train(set);
  EXPECT_EQ(report.final_errors, 0u);
  EXPECT_LE(report.epochs, 100);
  EXPECT_EQ(report.errors_per_epoch.back(), 0u);
  EXPECT_EQ(Errors(set, report.weights), 0u);
}

TEST(TrainTest, ZeroLearningRateIsIdentity) {
  const auto set = testing::SeparableSet(43, 50);
  TrainConfig config;
  config.learning_rate = 0.0;
  config.max_epochs = 7;
  config.initial = PreferenceWeights::Defaults();
  const TrainReport report = Train(set, config);
  EXPECT_EQ(report.weights, PreferenceWeights::Defaults());
  EXPECT_EQ(report.epochs, 7);
}

TEST(TrainTest, ZeroErrorEpochFreezesWeights) {
  const auto set = testing::SeparableSet(44, 50);
  const TrainReport first = Train(set);
  ASSERT_EQ(first.final_errors, 0u);
  TrainConfig again;
  again.initial = first.weights;
  const TrainReport second = Train(set, again);
  EXPECT_EQ(second.epochs, 1);
  EXPECT_EQ(second.weights, first.weights);
  for (std::size_t i = 0; i + 1 < first.errors_per_epoch.size(); ++i) {
    EXPECT_GT(first.errors_per_epoch[i], 0u);
  }
}

TEST(TrainTest, UpdateRule) {
  TrainingInstance inst;
  PreferenceVector gold, wrong;
  gold.set(Preference::kFirstNp);
  wrong.set(Preference::kRecency);
  inst.features = {gold, wrong};
  inst.anchors = {0, 5};
  inst.gold = 0;
  inst.correct = {true, false};
  TrainConfig config;
  config.max_epochs = 1;
  config.learning_rate = 0.25;
  const TrainReport report = Train({inst}, config);
  PreferenceWeights expected = PreferenceWeights::Uniform(1.0);
  expected[static_cast<std::size_t>(Preference::kFirstNp)] += 0.25;
  expected[static_cast<std::size_t>(Preference::kRecency)] -= 0.25;
  EXPECT_EQ(report.weights, expected);
  EXPECT_EQ(report.final_errors, 1u);
}

TEST(TrainTest, RejectsBadConfigAndInstances) {
  TrainConfig config;
  config.learning_rate = -1.0;
  EXPECT_THROW(Train({}, config), TrainingError);
  TrainingInstance empty;
  EXPECT_THROW(Train({empty}), TrainingError);
}

TEST(BuildInstancesTest, FromCorpus) {
  std::vector<Document> corpus;
  for (const auto &file : testing::CorpusFixtures()) {
    corpus.push_back(ParseDocument(testing::ReadData(file)));
  }
  const TrainingSet set = BuildInstances(corpus, testing::ExampleNames());
  EXPECT_EQ(set.unlinked, 0u);
  EXPECT_EQ(set.instances.size() + set.skipped, 30u);
  for (const auto &inst : set.instances) {
    EXPECT_TRUE(inst.correct[inst.gold]);
    // The gold index is the latest matching survivor.
    for (std::size_t i = inst.gold + 1; i < inst.correct.size(); ++i) {
      EXPECT_FALSE(inst.correct[i]);
    }
  }
  const TrainReport report = Train(set.instances);
  EXPECT_LE(report.final_errors, set.instances.size());
}

TEST(BuildInstancesTest, UnlinkedAndUnreachable) {
  const Document doc = ParseDocument(
      "Ali geldi. <pro id=\"1\">O</pro> güldü. <pro id=\"2\" ant=\"Zeynep\">O"
      "</pro> gitti.");
  const TrainingSet set = BuildInstances({doc}, testing::ExampleNames());
  EXPECT_EQ(set.unlinked, 1u);
  EXPECT_EQ(set.skipped, 1u);
  EXPECT_TRUE(set.instances.empty());
}

TEST(BuildInstancesTest, DocumentWithoutLinksIsAnError) {
  const Document doc = ParseDocument("Ali geldi. <pro id=\"1\">O</pro> güldü.");
  EXPECT_THROW(BuildInstances({doc}, testing::ExampleNames()), TrainingError);
}

}  // namespace
}  // namespace anafor
