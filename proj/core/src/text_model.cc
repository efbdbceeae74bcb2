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

#include "anafor/text_model.h"

#include <algorithm>
#include <array>
#include <utility>

#include "anafor/utf8.h"

namespace anafor {

namespace {

constexpr std::array<std::string_view, 3> kQuoteMarks = {"\"", "“", "”"};
constexpr std::array<std::string_view, 4> kTerminators = {".", "!", "?",
                                                          "…"};

bool IsSplitChar(char32_t cp) {
  return cp == U',' || cp == U'.' || cp == U'!' || cp == U'?' ||
         cp == U'…' || cp == U'"' || cp == U'“' || cp == U'”';
}

}  // namespace

std::string JoinNames(const NameSet &names, std::string_view sep) {
  std::string out;
  for (const auto &name : names) {
    if (!out.empty()) out.append(sep);
    out.append(name);
  }
  return out;
}

const char *ToString(PronounKind kind) {
  return kind == PronounKind::kPersonal ? "personal" : "reflexive";
}

const char *ToString(GrammaticalNumber number) {
  return number == GrammaticalNumber::kSingular ? "singular" : "plural";
}

const char *ToString(Overtness overtness) {
  return overtness == Overtness::kOvert ? "overt" : "zero";
}

bool IsTerminator(std::string_view surface) {
  return std::find(kTerminators.begin(), kTerminators.end(), surface) !=
         kTerminators.end();
}

bool IsQuoteMark(std::string_view surface) {
  return std::find(kQuoteMarks.begin(), kQuoteMarks.end(), surface) !=
         kQuoteMarks.end();
}

bool IsPunctuation(std::string_view surface) {
  return surface == "," || IsTerminator(surface) || IsQuoteMark(surface);
}

std::vector<RawToken> Tokenize(std::string_view text, std::string *trailing) {
  std::vector<RawToken> tokens;
  std::string whitespace;
  std::string word;
  auto flush_word = [&] {
    if (word.empty()) return;
    tokens.push_back({std::move(word), std::move(whitespace)});
    word.clear();
    whitespace.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::Next(text, pos);
    const std::string_view bytes = text.substr(start, pos - start);
    if (utf8::IsWhitespace(cp)) {
      flush_word();
      whitespace.append(bytes);
    } else if (IsSplitChar(cp)) {
      flush_word();
      tokens.push_back({std::string(bytes), std::move(whitespace)});
      whitespace.clear();
    } else {
      word.append(bytes);
    }
  }
  flush_word();
  if (trailing != nullptr) *trailing = std::move(whitespace);
  return tokens;
}

std::vector<std::size_t> SegmentSentences(
    const std::vector<RawToken> &tokens) {
  std::vector<std::size_t> sentence_of(tokens.size());
  std::size_t sentence = 0;
  bool in_quote = false;
  bool ending = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string &surface = tokens[i].surface;
    const bool quote = IsQuoteMark(surface);
    if (ending) {
      const bool continues_end =
          IsTerminator(surface) || (quote && in_quote);
      if (!continues_end) {
        ++sentence;
        ending = false;
      }
    }
    sentence_of[i] = sentence;
    if (quote) in_quote = !in_quote;
    if (IsTerminator(surface)) ending = true;
  }
  return sentence_of;
}

Document Document::Build(std::vector<RawToken> tokens,
                         std::vector<PronounMention> pronouns,
                         std::string trailing) {
  std::vector<std::size_t> sentence_of = SegmentSentences(tokens);
  return BuildSegmented(std::move(tokens), std::move(sentence_of),
                        std::move(pronouns), std::move(trailing));
}

Document Document::BuildSegmented(std::vector<RawToken> tokens,
                                  std::vector<std::size_t> sentence_of,
                                  std::vector<PronounMention> pronouns,
                                  std::string trailing) {
  if (sentence_of.size() != tokens.size()) {
    throw DocumentError("sentence assignment does not cover every token");
  }
  Document doc;
  doc.tokens_.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].surface.empty()) throw DocumentError("empty token");
    Token token;
    token.surface = std::move(tokens[i].surface);
    token.leading = std::move(tokens[i].leading);
    token.sentence_index = sentence_of[i];
    doc.tokens_.push_back(std::move(token));
  }
  doc.pronouns_ = std::move(pronouns);
  doc.trailing_ = std::move(trailing);
  doc.Index();
  return doc;
}

void Document::Index() {
  sentences_.clear();
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    Token &token = tokens_[i];
    token.index = i;
    if (sentences_.empty()) {
      if (token.sentence_index != 0) {
        throw DocumentError("sentence indices must start at 0");
      }
      sentences_.push_back({0, i, i});
    } else if (token.sentence_index == sentences_.back().index) {
      sentences_.back().last = i;
    } else if (token.sentence_index == sentences_.back().index + 1) {
      sentences_.push_back({token.sentence_index, i, i});
    } else {
      throw DocumentError("sentence indices must be contiguous");
    }
  }

  // Quotes pair left to right; an unpaired last quote opens a span that
  // runs to the end of its sentence.
  bool open = false;
  std::optional<std::size_t> last_quote;
  for (Token &token : tokens_) {
    if (IsQuoteMark(token.surface)) {
      open = !open;
      token.quoted = false;
      last_quote = token.index;
    } else {
      token.quoted = open;
    }
  }
  if (open) {
    const std::size_t sentence = tokens_[*last_quote].sentence_index;
    for (std::size_t i = *last_quote + 1; i < tokens_.size(); ++i) {
      if (tokens_[i].sentence_index != sentence) tokens_[i].quoted = false;
    }
  }

  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    tokens_[i].followed_by_comma =
        i + 1 < tokens_.size() && tokens_[i + 1].surface == ",";
  }

  for (std::size_t i = 0; i < pronouns_.size(); ++i) {
    const PronounMention &p = pronouns_[i];
    if (p.position >= tokens_.size()) {
      throw DocumentError("pronoun " + std::to_string(p.id) +
                          " is not followed by a token");
    }
    if (i > 0 && pronouns_[i - 1].position > p.position) {
      throw DocumentError("pronouns are not ordered by position");
    }
  }
}

std::size_t Document::SentenceOf(std::size_t index) const {
  if (index >= tokens_.size()) {
    throw DocumentError("token index " + std::to_string(index) +
                        " out of range");
  }
  return tokens_[index].sentence_index;
}

bool Document::IsQuoted(const PronounMention &p) const {
  const Token &at = token(p.position);
  if (!p.is_zero() || !IsQuoteMark(at.surface)) return at.quoted;
  return p.position > 0 && tokens_[p.position - 1].quoted;
}

std::optional<std::size_t> Document::FirstContentToken(
    std::size_t sentence) const {
  const Sentence &s = sentences_.at(sentence);
  for (std::size_t i = s.first; i <= s.last; ++i) {
    if (!IsPunctuation(tokens_[i].surface)) return i;
  }
  return std::nullopt;
}

const PronounMention *Document::FindPronoun(int id) const {
  for (const auto &p : pronouns_) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

Document Document::ReplacePronoun(
    int id, const std::vector<std::string> &replacement) const {
  if (replacement.empty()) throw DocumentError("empty replacement");
  auto it = std::find_if(pronouns_.begin(), pronouns_.end(),
                         [id](const PronounMention &p) { return p.id == id; });
  if (it == pronouns_.end()) {
    throw DocumentError("no pronoun with id " + std::to_string(id));
  }
  const PronounMention target = *it;
  const std::size_t pos = target.position;
  const std::size_t sentence = tokens_[pos].sentence_index;

  std::vector<RawToken> raw;
  std::vector<std::size_t> sentence_of;
  raw.reserve(tokens_.size() + replacement.size());
  sentence_of.reserve(tokens_.size() + replacement.size());
  auto insert_replacement = [&](const std::string &leading) {
    for (std::size_t k = 0; k < replacement.size(); ++k) {
      raw.push_back({replacement[k], k == 0 ? leading : std::string(" ")});
      sentence_of.push_back(sentence);
    }
  };
  for (const Token &token : tokens_) {
    if (token.index == pos) {
      if (target.is_zero()) {
        insert_replacement(target.leading);
        // The filled-in words need a separator before the token that
        // followed the marker.
        raw.push_back({token.surface,
                       token.leading.empty() ? std::string(" ") : token.leading});
        sentence_of.push_back(token.sentence_index);
        continue;
      } else {
        insert_replacement(token.leading);
        continue;
      }
    }
    raw.push_back({token.surface, token.leading});
    sentence_of.push_back(token.sentence_index);
  }

  const std::size_t shift =
      target.is_zero() ? replacement.size() : replacement.size() - 1;
  std::vector<PronounMention> pronouns;
  pronouns.reserve(pronouns_.size() - 1);
  bool after = false;
  for (const auto &p : pronouns_) {
    if (p.id == id) {
      after = true;
      continue;
    }
    PronounMention moved = p;
    if (after) moved.position += shift;
    pronouns.push_back(std::move(moved));
  }
  return BuildSegmented(std::move(raw), std::move(sentence_of),
                        std::move(pronouns), trailing_);
}

std::size_t SentenceDistance(const Document &doc, std::size_t a,
                             std::size_t b) {
  const std::size_t sa = doc.SentenceOf(a);
  const std::size_t sb = doc.SentenceOf(b);
  return sa > sb ? sa - sb : sb - sa;
}

}  // namespace anafor
