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

#ifndef ANAFOR_MORPH_H_
#define ANAFOR_MORPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anafor/dictionary.h"
#include "anafor/text_model.h"

namespace anafor {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pronoun lemmas in scope. Kind and number follow from the lemma.
enum class PronounLemma { kO, kOnlar, kKendi, kKendisi, kKendileri };

const char *ToString(PronounLemma lemma);

struct PronounForm {
  PronounLemma lemma;
  PronounKind kind;
  GrammaticalNumber number;

  bool operator==(const PronounForm &other) const = default;
};

PronounForm FormOf(PronounLemma lemma);

// What the post-apostrophe suffix of a name token carries.
struct SuffixAnalysis {
  bool recognized = true;
  bool plural = false;
  bool case_marker = false;
  bool copula = false;
};

// Closed inflection lexicon for the in-scope pronouns plus the suffix tables
// used to read proper-name suffixes. The text format has one form per line
// under section headers:
//
//   [pronoun:o]        inflected forms of 'o'
//   [pronoun:onlar]    ... likewise for kendi, kendisi, kendileri
//   [suffix:case]      case markers
//   [suffix:plural]    plural markers, matched as a suffix prefix
//   [suffix:copula]    copular endings, matched suffix-finally
//
// '#' starts a comment line.
class Lexicon {
 public:
  // The built-in tables (also shipped as data/lexicon.txt).
  static const Lexicon &Default();

  static Lexicon Parse(std::string_view text);
  static Lexicon Load(const std::string &path);

  // Case-insensitive (Turkish casing) lookup of an inflected pronoun.
  std::optional<PronounForm> ClassifyPronoun(std::string_view surface) const;

  SuffixAnalysis AnalyzeSuffix(std::string_view suffix) const;

  // Lowercased surface -> lemma.
  const std::map<std::string, PronounLemma> &pronoun_forms() const {
    return forms_;
  }
  const std::vector<std::string> &case_markers() const { return case_; }
  const std::vector<std::string> &plural_markers() const { return plural_; }
  const std::vector<std::string> &copula_markers() const { return copula_; }

  bool operator==(const Lexicon &other) const = default;

 private:
  std::map<std::string, PronounLemma> forms_;
  // Each table sorted longest first so the first hit is the longest match.
  std::vector<std::string> case_;
  std::vector<std::string> plural_;
  std::vector<std::string> copula_;
};

const std::string &DefaultLexiconText();

enum class Case { kNominative, kOblique };

struct NameOccurrence {
  std::string base;
  std::size_t token_index = 0;
  Case grammatical_case = Case::kNominative;
  bool plural_suffix = false;
  bool copular_suffix = false;

  bool operator==(const NameOccurrence &other) const = default;
};

std::optional<PronounForm> ClassifyPronoun(
    std::string_view surface, const Lexicon &lexicon = Lexicon::Default());

// Matches a token against the gazetteer: the part before the first
// apostrophe (or the whole token) must be an entry. Pronoun forms never
// match.
std::optional<NameOccurrence> MatchName(
    const Token &token, const NameDictionary &dict,
    const Lexicon &lexicon = Lexicon::Default());

inline bool IsNominative(const NameOccurrence &occ) {
  return occ.grammatical_case == Case::kNominative;
}

}  // namespace anafor

#endif  // ANAFOR_MORPH_H_
