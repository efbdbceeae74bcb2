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

#include "anafor/morph.h"

#include <algorithm>
#include <array>

#include "anafor/utf8.h"
#include "internal/text_util.h"

namespace anafor {

// Defined in the generated lexicon_data.cc (contents of data/lexicon.txt).
extern const char kDefaultLexiconText[];

namespace {

struct LemmaInfo {
  PronounLemma lemma;
  std::string_view name;
  PronounKind kind;
  GrammaticalNumber number;
};

constexpr std::array<LemmaInfo, 5> kLemmas = {{
    {PronounLemma::kO, "o", PronounKind::kPersonal,
     GrammaticalNumber::kSingular},
    {PronounLemma::kOnlar, "onlar", PronounKind::kPersonal,
     GrammaticalNumber::kPlural},
    {PronounLemma::kKendi, "kendi", PronounKind::kReflexive,
     GrammaticalNumber::kSingular},
    {PronounLemma::kKendisi, "kendisi", PronounKind::kReflexive,
     GrammaticalNumber::kSingular},
    {PronounLemma::kKendileri, "kendileri", PronounKind::kReflexive,
     GrammaticalNumber::kPlural},
}};

const LemmaInfo &InfoOf(PronounLemma lemma) {
  return kLemmas[static_cast<std::size_t>(lemma)];
}

void SortLongestFirst(std::vector<std::string> *table) {
  std::sort(table->begin(), table->end(),
            [](const std::string &a, const std::string &b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  table->erase(std::unique(table->begin(), table->end()), table->end());
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Byte offset of the first apostrophe (' or ’) and its length.
std::optional<std::pair<std::size_t, std::size_t>> FindApostrophe(
    std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::Next(s, pos);
    if (cp == U'\'' || cp == U'’') return std::make_pair(start, pos - start);
  }
  return std::nullopt;
}

}  // namespace

const char *ToString(PronounLemma lemma) {
  return InfoOf(lemma).name.data();
}

PronounForm FormOf(PronounLemma lemma) {
  const LemmaInfo &info = InfoOf(lemma);
  return {lemma, info.kind, info.number};
}

const std::string &DefaultLexiconText() {
  static const std::string text(kDefaultLexiconText);
  return text;
}

const Lexicon &Lexicon::Default() {
  static const Lexicon lexicon = Parse(DefaultLexiconText());
  return lexicon;
}

Lexicon Lexicon::Parse(std::string_view text) {
  text = internal::StripBom(text);
  if (!utf8::IsValid(text)) throw LexiconError("lexicon is not UTF-8");
  Lexicon lex;
  enum class Section { kNone, kPronoun, kCase, kPlural, kCopula };
  Section section = Section::kNone;
  PronounLemma lemma = PronounLemma::kO;
  int line_number = 0;
  auto fail = [&](const std::string &message) {
    throw LexiconError("lexicon line " + std::to_string(line_number) + ": " +
                       message);
  };
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_number;
    line = internal::Trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const std::string_view header = line.substr(1, line.size() - 2);
      if (StartsWith(header, "pronoun:")) {
        const std::string_view name = header.substr(8);
        auto it = std::find_if(kLemmas.begin(), kLemmas.end(),
                               [&](const LemmaInfo &l) { return l.name == name; });
        if (it == kLemmas.end()) fail("unknown pronoun lemma '" +
                                      std::string(name) + "'");
        section = Section::kPronoun;
        lemma = it->lemma;
      } else if (header == "suffix:case") {
        section = Section::kCase;
      } else if (header == "suffix:plural") {
        section = Section::kPlural;
      } else if (header == "suffix:copula") {
        section = Section::kCopula;
      } else {
        fail("unknown section '" + std::string(header) + "'");
      }
      continue;
    }
    std::string form = utf8::ToLowerTurkish(line);
    if (form.find_first_of(" \t") != std::string::npos) {
      fail("form contains whitespace");
    }
    switch (section) {
      case Section::kNone:
        fail("form outside of a section");
        break;
      case Section::kPronoun: {
        auto [it, inserted] = lex.forms_.emplace(form, lemma);
        if (!inserted && it->second != lemma) {
          fail("form '" + form + "' listed under two lemmas");
        }
        break;
      }
      case Section::kCase:
        lex.case_.push_back(std::move(form));
        break;
      case Section::kPlural:
        lex.plural_.push_back(std::move(form));
        break;
      case Section::kCopula:
        lex.copula_.push_back(std::move(form));
        break;
    }
  }
  SortLongestFirst(&lex.case_);
  SortLongestFirst(&lex.plural_);
  SortLongestFirst(&lex.copula_);
  return lex;
}

Lexicon Lexicon::Load(const std::string &path) {
  std::string text;
  if (!internal::ReadFile(path, &text)) {
    throw LexiconError("cannot read lexicon " + path);
  }
  try {
    return Parse(text);
  } catch (const LexiconError &e) {
    throw LexiconError(path + ": " + e.what());
  }
}

std::optional<PronounForm> Lexicon::ClassifyPronoun(
    std::string_view surface) const {
  auto it = forms_.find(utf8::ToLowerTurkish(surface));
  if (it == forms_.end()) return std::nullopt;
  return FormOf(it->second);
}

SuffixAnalysis Lexicon::AnalyzeSuffix(std::string_view suffix) const {
  SuffixAnalysis result;
  const std::string lowered = utf8::ToLowerTurkish(suffix);
  std::string_view rest = lowered;
  for (const auto &marker : plural_) {
    if (StartsWith(rest, marker)) {
      result.plural = true;
      rest.remove_prefix(marker.size());
      break;
    }
  }
  if (rest.empty()) return result;
  for (const auto &marker : copula_) {
    if (EndsWith(rest, marker)) {
      result.copula = true;
      rest.remove_suffix(marker.size());
      break;
    }
  }
  if (rest.empty()) return result;
  if (std::find(case_.begin(), case_.end(), rest) != case_.end()) {
    result.case_marker = true;
  } else {
    result.recognized = false;
  }
  return result;
}

std::optional<PronounForm> ClassifyPronoun(std::string_view surface,
                                           const Lexicon &lexicon) {
  return lexicon.ClassifyPronoun(surface);
}

std::optional<NameOccurrence> MatchName(const Token &token,
                                        const NameDictionary &dict,
                                        const Lexicon &lexicon) {
  if (lexicon.ClassifyPronoun(token.surface)) return std::nullopt;
  std::string_view surface = token.surface;
  std::string_view base = surface;
  std::string_view suffix;
  bool has_suffix = false;
  if (auto apostrophe = FindApostrophe(surface)) {
    base = surface.substr(0, apostrophe->first);
    suffix = surface.substr(apostrophe->first + apostrophe->second);
    has_suffix = true;
  }
  if (base.empty() || !dict.Contains(base)) return std::nullopt;

  NameOccurrence occ;
  occ.base = std::string(base);
  occ.token_index = token.index;
  if (has_suffix) {
    const SuffixAnalysis analysis = lexicon.AnalyzeSuffix(suffix);
    occ.plural_suffix = analysis.plural;
    occ.copular_suffix = analysis.copula;
    const bool nominative =
        analysis.recognized && !analysis.case_marker && !analysis.copula;
    occ.grammatical_case = nominative ? Case::kNominative : Case::kOblique;
  }
  return occ;
}

}  // namespace anafor
