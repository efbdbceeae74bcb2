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

#include "anafor/annotation_io.h"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "anafor/utf8.h"
#include "internal/text_util.h"

namespace anafor {

ParseError::ParseError(const std::string &message, int line, int column,
                       const std::string &source)
    : DocumentError((source.empty() ? "" : source + ":") +
                    std::to_string(line) + ":" + std::to_string(column) +
                    ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Attribute {
  std::string name;
  std::string value;
};

class Parser {
 public:
  Parser(std::string_view text, const Lexicon &lexicon)
      : text_(text), lexicon_(lexicon) {}

  Document Parse() {
    if (!utf8::IsValid(text_)) throw ParseError("input is not UTF-8", 1, 1);
    std::size_t chunk_start = 0;
    while (pos_ < text_.size()) {
      if (text_[pos_] != '<') {
        Advance(1);
        continue;
      }
      AddText(text_.substr(chunk_start, pos_ - chunk_start));
      ParseTag();
      chunk_start = pos_;
    }
    AddText(text_.substr(chunk_start));

    for (std::size_t i = 0; i < pronouns_.size(); ++i) {
      if (pronouns_[i].position >= tokens_.size()) {
        throw ParseError("zero pronoun is not followed by a token",
                         locations_[i].first, locations_[i].second);
      }
    }
    return Document::Build(std::move(tokens_), std::move(pronouns_),
                           std::move(pending_ws_));
  }

 private:
  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  [[noreturn]] void Fail(const std::string &message, int line, int column) {
    throw ParseError(message, line, column);
  }

  void AddText(std::string_view chunk) {
    std::string trailing;
    std::vector<RawToken> tokens = Tokenize(chunk, &trailing);
    if (tokens.empty()) {
      pending_ws_ += trailing;
      return;
    }
    tokens.front().leading.insert(0, pending_ws_);
    pending_ws_ = std::move(trailing);
    for (auto &t : tokens) tokens_.push_back(std::move(t));
  }

  bool Consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    Advance(s.size());
    return true;
  }

  void SkipSpaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      Advance(1);
    }
  }

  std::string ReadName() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= 'A' && text_[pos_] <= 'Z'))) {
      Advance(1);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Reads attributes up to (not including) '>' or '/>'.
  std::vector<Attribute> ReadAttributes() {
    std::vector<Attribute> attrs;
    std::set<std::string> seen;
    while (true) {
      SkipSpaces();
      if (pos_ >= text_.size()) Fail("unterminated tag", line_, column_);
      if (text_[pos_] == '>' || text_[pos_] == '/') return attrs;
      const int line = line_, column = column_;
      std::string name = ReadName();
      if (name.empty()) Fail("expected attribute name", line, column);
      SkipSpaces();
      if (!Consume("=")) Fail("expected '=' after " + name, line_, column_);
      SkipSpaces();
      if (!Consume("\"")) Fail("expected '\"'", line_, column_);
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        Advance(1);
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        Fail("unterminated attribute value", line, column);
      }
      std::string value(text_.substr(start, pos_ - start));
      Advance(1);
      if (!seen.insert(name).second) {
        Fail("duplicate attribute '" + name + "'", line, column);
      }
      attrs.push_back({std::move(name), std::move(value)});
    }
  }

  int ParseId(const std::string &value, int line, int column) {
    int id = 0;
    if (value.empty() || value.size() > 9 ||
        value.find_first_not_of("0123456789") != std::string::npos) {
      Fail("invalid id '" + value + "'", line, column);
    }
    id = std::stoi(value);
    if (!ids_.insert(id).second) {
      Fail("duplicate id " + value, line, column);
    }
    return id;
  }

  NameSet ParseAntecedent(const std::string &value, int line, int column) {
    NameSet names;
    for (std::string_view part : internal::Split(value, ';')) {
      part = internal::Trim(part);
      if (part.empty()) Fail("empty name in ant=\"" + value + "\"", line, column);
      names.emplace(part);
    }
    return names;
  }

  void ParseTag() {
    const int line = line_, column = column_;
    Advance(1);  // '<'
    const std::string tag = ReadName();
    if (tag != "pro" && tag != "zero") {
      Fail(tag.empty() ? "stray '<'" : "unknown tag <" + tag + ">", line,
           column);
    }
    std::vector<Attribute> attrs = ReadAttributes();

    PronounMention p;
    bool has_id = false, has_kind = false, has_num = false;
    for (const auto &attr : attrs) {
      if (attr.name == "id") {
        p.id = ParseId(attr.value, line, column);
        has_id = true;
      } else if (attr.name == "ant") {
        p.gold_antecedent = ParseAntecedent(attr.value, line, column);
      } else if (tag == "zero" && attr.name == "kind") {
        if (attr.value == "pers") {
          p.kind = PronounKind::kPersonal;
        } else if (attr.value == "refl") {
          p.kind = PronounKind::kReflexive;
        } else {
          Fail("unknown kind \"" + attr.value + "\"", line, column);
        }
        has_kind = true;
      } else if (tag == "zero" && attr.name == "num") {
        if (attr.value == "sg") {
          p.number = GrammaticalNumber::kSingular;
        } else if (attr.value == "pl") {
          p.number = GrammaticalNumber::kPlural;
        } else {
          Fail("unknown num \"" + attr.value + "\"", line, column);
        }
        has_num = true;
      } else {
        Fail("unknown attribute '" + attr.name + "' on <" + tag + ">", line,
             column);
      }
    }
    if (!has_id) Fail("<" + tag + "> without id", line, column);

    if (tag == "zero") {
      if (!has_kind || !has_num) {
        Fail("<zero> requires kind and num", line, column);
      }
      if (!Consume("/>")) Fail("expected '/>'", line_, column_);
      p.overtness = Overtness::kZero;
      p.position = tokens_.size();
      p.leading = std::move(pending_ws_);
      pending_ws_.clear();
      Push(std::move(p), line, column);
      return;
    }

    if (!Consume(">")) Fail("expected '>'", line_, column_);
    const std::size_t start = pos_;
    const std::size_t close = text_.find("</pro>", pos_);
    if (close == std::string_view::npos) Fail("missing </pro>", line, column);
    const std::string_view content = text_.substr(start, close - start);
    if (content.find('<') != std::string_view::npos) {
      Fail("nested tag inside <pro>", line, column);
    }
    std::string trailing;
    std::vector<RawToken> inner = Tokenize(content, &trailing);
    if (inner.size() != 1 || !inner.front().leading.empty() ||
        !trailing.empty()) {
      Fail("<pro> must enclose exactly one token", line, column);
    }
    auto form = lexicon_.ClassifyPronoun(inner.front().surface);
    if (!form) {
      Fail("'" + inner.front().surface + "' is not a known pronoun form", line,
           column);
    }
    Advance(close - start);
    Advance(6);  // </pro>

    p.overtness = Overtness::kOvert;
    p.kind = form->kind;
    p.number = form->number;
    p.surface = inner.front().surface;
    p.position = tokens_.size();
    inner.front().leading = std::move(pending_ws_);
    pending_ws_.clear();
    tokens_.push_back(std::move(inner.front()));
    Push(std::move(p), line, column);
  }

  void Push(PronounMention p, int line, int column) {
    pronouns_.push_back(std::move(p));
    locations_.emplace_back(line, column);
  }

  std::string_view text_;
  const Lexicon &lexicon_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::string pending_ws_;
  std::vector<RawToken> tokens_;
  std::vector<PronounMention> pronouns_;
  std::vector<std::pair<int, int>> locations_;
  std::set<int> ids_;
};

void AppendAttribute(std::string &out, const char *name,
                     const std::string &value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += value;
  out += '"';
}

void AppendTagAttributes(std::string &out, const PronounMention &p) {
  AppendAttribute(out, "id", std::to_string(p.id));
  if (p.is_zero()) {
    AppendAttribute(out, "kind",
                    p.kind == PronounKind::kPersonal ? "pers" : "refl");
    AppendAttribute(out, "num",
                    p.number == GrammaticalNumber::kSingular ? "sg" : "pl");
  }
  if (p.gold_antecedent) {
    AppendAttribute(out, "ant", JoinNames(*p.gold_antecedent));
  }
}

}  // namespace

Document ParseDocument(std::string_view text, const Lexicon &lexicon) {
  return Parser(text, lexicon).Parse();
}

std::string SerializeDocument(const Document &doc) {
  std::multimap<std::size_t, const PronounMention *> at;
  for (const auto &p : doc.pronouns()) at.emplace(p.position, &p);

  std::string out;
  for (const Token &token : doc.tokens()) {
    const PronounMention *overt = nullptr;
    auto [begin, end] = at.equal_range(token.index);
    for (auto it = begin; it != end; ++it) {
      const PronounMention &p = *it->second;
      if (!p.is_zero()) {
        overt = &p;
        continue;
      }
      out += p.leading;
      out += "<zero";
      AppendTagAttributes(out, p);
      out += "/>";
    }
    out += token.leading;
    if (overt != nullptr) {
      out += "<pro";
      AppendTagAttributes(out, *overt);
      out += '>';
      out += token.surface;
      out += "</pro>";
    } else {
      out += token.surface;
    }
  }
  out += doc.trailing();
  return out;
}

Document LoadDocument(const std::string &path, const Lexicon &lexicon) {
  std::string text;
  if (!internal::ReadFile(path, &text)) {
    throw DocumentError("cannot read " + path);
  }
  try {
    return ParseDocument(text, lexicon);
  } catch (const ParseError &e) {
    throw ParseError(e.message(), e.line(), e.column(), path);
  }
}

}  // namespace anafor
