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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace anafor {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "anafor");
  std::ostringstream out, err;
  const int status = cli::Run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("anafor_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, ResolveWritesParaphraseAndTrace) {
  const Result r =
      RunCli({"resolve", "--dict", DataPath("names.txt"), "--trace",
              Path("t.tsv"), DataPath("examples/pref_first_np.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "Ahmet Ali'yi gördü. Ahmet Koştu.\n");
  EXPECT_EQ(ReadFile(Path("t.tsv")),
            "# id\toutcome\tantecedent\tscore\tcandidates\n"
            "1\tresolved\tAhmet\t7.6000\t*Ahmet@0:11110000=7.6000,"
            "Ali@1:11000000=4.3500\n");
}

TEST_F(CliTest, BaselineDiffers) {
  const Result r = RunCli({"baseline", "--dict", DataPath("names.txt"),
                           DataPath("examples/pref_first_np.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "Ahmet Ali'yi gördü. Ali Koştu.\n");
}

TEST_F(CliTest, DictionaryFromEnvironment) {
  ::setenv("ANAFOR_DICT", DataPath("names.txt").c_str(), 1);
  const Result r =
      RunCli({"resolve", DataPath("examples/pref_first_np.txt")});
  ::unsetenv("ANAFOR_DICT");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "Ahmet Ali'yi gördü. Ahmet Koştu.\n");
}

TEST_F(CliTest, MissingDictionary) {
  ::unsetenv("ANAFOR_DICT");
  const Result r =
      RunCli({"resolve", DataPath("examples/pref_first_np.txt")});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("dictionary"), std::string::npos);
}

TEST_F(CliTest, EmptyDictionaryLeavesEverythingAmbiguous) {
  std::ofstream(Path("empty.txt")).close();
  const Result r = RunCli({"resolve", "--dict", Path("empty.txt"), "--trace",
                           Path("t.tsv"),
                           DataPath("examples/pref_first_np.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(ReadFile(Path("t.tsv")).find("1\tambiguous"), std::string::npos);
}

TEST_F(CliTest, ParseErrorIsReported) {
  std::ofstream(Path("bad.txt")) << "Ali <pro id=\"1\">okul</pro>.";
  const Result r =
      RunCli({"resolve", "--dict", DataPath("names.txt"), Path("bad.txt")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("bad.txt"), std::string::npos);
  EXPECT_NE(r.err.find("1:5"), std::string::npos) << r.err;
}

TEST_F(CliTest, MultipleInputsNeedOutputDir) {
  const std::vector<std::string> inputs = {
      DataPath("corpus/park.txt"), DataPath("corpus/trip.txt")};
  Result r = RunCli({"resolve", "--dict", DataPath("names.txt"), inputs[0],
                     inputs[1]});
  EXPECT_EQ(r.status, 2);
  r = RunCli({"resolve", "--dict", DataPath("names.txt"), "--output-dir",
              Path("out"), inputs[0], inputs[1]});
  ASSERT_EQ(r.status, 0) << r.err;
  for (const char *stem : {"park", "trip"}) {
    const Result single =
        RunCli({"resolve", "--dict", DataPath("names.txt"), "--trace",
                Path("single.tsv"),
                DataPath(std::string("corpus/") + stem + ".txt")});
    EXPECT_EQ(ReadFile(Path(std::string("out/") + stem + ".resolved.txt")),
              single.out);
    EXPECT_EQ(ReadFile(Path(std::string("out/") + stem + ".trace.tsv")),
              ReadFile(Path("single.tsv")));
  }
}

TEST_F(CliTest, ResolveIsByteIdenticalAcrossRuns) {
  std::string first;
  for (int i = 0; i < 3; ++i) {
    const Result r =
        RunCli({"resolve", "--dict", DataPath("names.txt"), "--trace",
                Path("t" + std::to_string(i)), DataPath("corpus/market.txt")});
    ASSERT_EQ(r.status, 0);
    const std::string all = r.out + ReadFile(Path("t" + std::to_string(i)));
    if (i == 0) first = all;
    EXPECT_EQ(all, first);
  }
}

TEST_F(CliTest, EvalScoresTrace) {
  ASSERT_EQ(RunCli({"resolve", "--dict", DataPath("names.txt"), "--trace",
                    Path("t.tsv"), DataPath("corpus/park.txt")})
                .status,
            0);
  const Result r = RunCli({"eval", "--gold", DataPath("corpus/park.txt"),
                           "--trace", Path("t.tsv"), "--format", "kv"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out,
            "identified=3\nattempted=3\nambiguous=0\ncorrect=3\n"
            "recall=100.0\nprecision=100.0\n");
}

TEST_F(CliTest, EvalPairsMustMatch) {
  const Result r = RunCli({"eval", "--gold", DataPath("corpus/park.txt"),
                           "--gold", DataPath("corpus/trip.txt"), "--trace",
                           DataPath("corpus/expected.tsv")});
  EXPECT_EQ(r.status, 2);
}

TEST_F(CliTest, CompareOnMiniCorpus) {
  std::vector<std::string> args = {"compare", "--dict", DataPath("names.txt"),
                                   "--format", "kv"};
  for (const auto &f : testing::CorpusFixtures()) args.push_back(DataPath(f));
  const Result r = RunCli(args);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("system.correct=23\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("baseline.correct=16\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("delta.recall=+23.4\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, TrainWritesLoadableWeights) {
  std::vector<std::string> args = {"train", "--dict", DataPath("names.txt"),
                                   "-o", Path("w.txt"), "--format", "kv"};
  for (const auto &f : testing::CorpusFixtures()) args.push_back(DataPath(f));
  const Result r = RunCli(args);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("instances="), std::string::npos);
  const Result resolved =
      RunCli({"resolve", "--dict", DataPath("names.txt"), "--weights",
              Path("w.txt"), DataPath("corpus/park.txt")});
  EXPECT_EQ(resolved.status, 0) << resolved.err;
}

TEST_F(CliTest, TrainWithoutLinksFails) {
  const Result r = RunCli({"train", "--dict", DataPath("names.txt"), "-o",
                           Path("w.txt"),
                           DataPath("examples/constraint_personal.txt")});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, BadWeightsFile) {
  std::ofstream(Path("w.txt")) << "recency = x\n";
  const Result r =
      RunCli({"resolve", "--dict", DataPath("names.txt"), "--weights",
              Path("w.txt"), DataPath("corpus/park.txt")});
  EXPECT_EQ(r.status, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(RunCli({}).status, 0);
  EXPECT_NE(RunCli({"frobnicate"}).status, 0);
  EXPECT_NE(RunCli({"resolve", "/nonexistent.txt"}).status, 0);
  EXPECT_NE(RunCli({"eval", "--format", "xml"}).status, 0);
  const Result help = RunCli({"--help"});
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("resolve"), std::string::npos);
}

TEST_F(CliTest, RealBinary) {
  const std::string command = std::string(ANAFOR_CLI_PATH) + " resolve --dict " +
                              DataPath("names.txt") + " " +
                              DataPath("examples/pref_punctuation.txt") + " > " +
                              Path("out.txt");
  ASSERT_EQ(std::system(command.c_str()), 0);
  EXPECT_EQ(ReadFile(Path("out.txt")),
            "Yolda Tekin, Ali'ye seslendi. Tekin Çok yorgundu.\n");
  const std::string failing =
      std::string(ANAFOR_CLI_PATH) + " resolve --dict /nonexistent " +
      DataPath("corpus/park.txt") + " 2> " + Path("err.txt");
  EXPECT_NE(std::system(failing.c_str()), 0);
  EXPECT_FALSE(ReadFile(Path("err.txt")).empty());
}

}  // namespace
}  // namespace anafor
