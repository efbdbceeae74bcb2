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

#ifndef ANAFOR_TEXT_MODEL_H_
#define ANAFOR_TEXT_MODEL_H_

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anafor {

// A set of proper-name bases, e.g. {"Ahmet", "Fatma"} for a plural link.
using NameSet = std::set<std::string>;

// Joins the names of a set with ';' in lexicographic order ("Ahmet;Fatma").
std::string JoinNames(const NameSet &names, std::string_view sep = ";");

struct Token {
  std::string surface;
  std::size_t index = 0;
  std::size_t sentence_index = 0;
  bool quoted = false;
  bool followed_by_comma = false;
  // Source whitespace preceding the token; kept so documents serialize back
  // to the bytes they were parsed from.
  std::string leading;

  bool operator==(const Token &other) const = default;
};

struct Sentence {
  std::size_t index = 0;
  // Inclusive token range.
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const Sentence &other) const = default;
};

enum class PronounKind { kPersonal, kReflexive };
enum class GrammaticalNumber { kSingular, kPlural };
enum class Overtness { kOvert, kZero };

const char *ToString(PronounKind kind);
const char *ToString(GrammaticalNumber number);
const char *ToString(Overtness overtness);

struct PronounMention {
  int id = 0;
  PronounKind kind = PronounKind::kPersonal;
  GrammaticalNumber number = GrammaticalNumber::kSingular;
  Overtness overtness = Overtness::kOvert;
  // Overt: the pronoun token. Zero: the token the marker precedes.
  std::size_t position = 0;
  // Empty for zero pronouns.
  std::string surface;
  std::optional<NameSet> gold_antecedent;
  // Whitespace before a zero marker tag (overt pronouns use the token's).
  std::string leading;

  bool is_zero() const { return overtness == Overtness::kZero; }
  bool operator==(const PronounMention &other) const = default;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Token as produced by the tokenizer, before document-level indexing.
struct RawToken {
  std::string surface;
  std::string leading;
};

// Sentence-segmented, tokenized text with its pronoun annotations. Indices
// and derived flags (quoted, followed_by_comma, sentence ranges) are
// computed at construction and kept consistent by every mutating helper.
class Document {
 public:
  Document() = default;

  // Segments raw tokens into sentences and indexes everything. Pronouns
  // must be ordered by position; positions must be valid token indices.
  static Document Build(std::vector<RawToken> tokens,
                        std::vector<PronounMention> pronouns,
                        std::string trailing = {});

  // Rebuilds with explicit sentence assignment (one entry per token).
  // Used by the resolver, where replacement never changes segmentation.
  static Document BuildSegmented(std::vector<RawToken> tokens,
                                 std::vector<std::size_t> sentence_of,
                                 std::vector<PronounMention> pronouns,
                                 std::string trailing = {});

  const std::vector<Token> &tokens() const { return tokens_; }
  const std::vector<Sentence> &sentences() const { return sentences_; }
  const std::vector<PronounMention> &pronouns() const { return pronouns_; }
  const std::string &trailing() const { return trailing_; }

  const Token &token(std::size_t i) const { return tokens_.at(i); }
  std::size_t size() const { return tokens_.size(); }

  // Sentence of the token at `index`; throws DocumentError when invalid.
  std::size_t SentenceOf(std::size_t index) const;

  // Sentence a pronoun belongs to (zero pronouns: the following token's).
  std::size_t SentenceOf(const PronounMention &p) const {
    return SentenceOf(p.position);
  }

  // Whether a pronoun sits inside quoted text. A zero marker right before a
  // quote mark takes the quotedness of the token preceding it.
  bool IsQuoted(const PronounMention &p) const;

  // Index of the first non-punctuation, non-quote token of a sentence, or
  // nullopt when the sentence holds only punctuation.
  std::optional<std::size_t> FirstContentToken(std::size_t sentence) const;

  const PronounMention *FindPronoun(int id) const;

  // Replaces pronoun `id` with `replacement` tokens: an overt pronoun token
  // is overwritten, a zero marker is filled in at its position. The pronoun
  // leaves the annotation list; later positions shift accordingly.
  Document ReplacePronoun(int id,
                          const std::vector<std::string> &replacement) const;

  bool operator==(const Document &other) const = default;

 private:
  void Index();

  std::vector<Token> tokens_;
  std::vector<Sentence> sentences_;
  std::vector<PronounMention> pronouns_;
  std::string trailing_;
};

// |sentence(a) - sentence(b)|; throws DocumentError on an invalid index.
std::size_t SentenceDistance(const Document &doc, std::size_t a,
                             std::size_t b);

// Splits plain text on whitespace; `,` `.` `!` `?` `…` and double quotes
// (straight or curly) become tokens of their own. Apostrophes stay inside
// tokens (Ali'yi). The first token's leading whitespace starts at the
// beginning of `text`; whitespace after the last token goes to `trailing`.
std::vector<RawToken> Tokenize(std::string_view text,
                               std::string *trailing = nullptr);

bool IsTerminator(std::string_view surface);
bool IsQuoteMark(std::string_view surface);
bool IsPunctuation(std::string_view surface);

// Assigns a sentence index to each token. A sentence ends after a run of
// terminators, plus a closing quote immediately following them.
std::vector<std::size_t> SegmentSentences(const std::vector<RawToken> &tokens);

}  // namespace anafor

#endif  // ANAFOR_TEXT_MODEL_H_
