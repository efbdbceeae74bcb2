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

#include "anafor/dictionary.h"

#include <cstdio>
#include <fstream>

#include "gtest/gtest.h"
#include "test_util.h"

namespace anafor {
namespace {

TEST(DictionaryTest, ParseDeduplicates) {
  const NameDictionary dict = ParseDictionary("Ayşe\nAli\nAli\n");
  EXPECT_EQ(dict.size(), 2u);
  EXPECT_TRUE(dict.Contains("Ayşe"));
  EXPECT_TRUE(dict.Contains("Ali"));
  EXPECT_FALSE(dict.Contains("ali"));
}

TEST(DictionaryTest, TrimsSkipsCommentsAndBom) {
  const NameDictionary dict =
      ParseDictionary("\xEF\xBB\xBF# names\n  Murat \r\n\n\tZeynep\n");
  EXPECT_EQ(dict.size(), 2u);
  EXPECT_TRUE(dict.Contains("Murat"));
  EXPECT_TRUE(dict.Contains("Zeynep"));
}

TEST(DictionaryTest, EmptyFileIsEmptyDictionary) {
  EXPECT_TRUE(ParseDictionary("").empty());
  EXPECT_TRUE(ParseDictionary("# nothing\n\n").empty());
}

TEST(DictionaryTest, RejectsInvalidUtf8) {
  EXPECT_THROW(ParseDictionary("Ali\n\xff\n"), DictionaryError);
}

TEST(DictionaryTest, RejectsMalformedEntriesWithLineNumber) {
  try {
    ParseDictionary("Ali\nayşe\n");
    FAIL() << "expected DictionaryError";
  } catch (const DictionaryError &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(ParseDictionary("Ali Veli\n"), DictionaryError);
  EXPECT_THROW(ParseDictionary("Ali'ye\n"), DictionaryError);
  EXPECT_THROW(NameDictionary({""}), DictionaryError);
}

TEST(DictionaryTest, LoadsExampleGazetteer) {
  const NameDictionary dict =
      LoadDictionary(testing::DataPath("names.txt"));
  EXPECT_EQ(dict.size(), 9u);
  for (const char *name : {"Ayşe", "Ahmet", "Fatma", "Ali", "Zerrin", "Murat",
                           "Zeynep", "Tekin", "Ayla"}) {
    EXPECT_TRUE(dict.Contains(name)) << name;
  }
}

TEST(DictionaryTest, UnreadableFile) {
  EXPECT_THROW(LoadDictionary("/nonexistent/names.txt"), DictionaryError);
}

}  // namespace
}  // namespace anafor
