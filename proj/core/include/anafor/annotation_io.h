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

#ifndef ANAFOR_ANNOTATION_IO_H_
#define ANAFOR_ANNOTATION_IO_H_

#include <string>
#include <string_view>

#include "anafor/morph.h"
#include "anafor/text_model.h"

namespace anafor {

class ParseError : public DocumentError {
 public:
  // `source` (a file name) prefixes the rendered message when non-empty.
  ParseError(const std::string &message, int line, int column,
             const std::string &source = {});

  const std::string &message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

// Parses the annotated corpus format: plain UTF-8 text with inline tags
//
//   <pro id="3" ant="Ayşe">onu</pro>              overt pronoun
//   <zero id="4" kind="pers" num="pl" ant="Ahmet;Fatma"/>   zero pronoun
//
// `ant` is optional and lists gold antecedent names separated by ';'.
// Overt pronoun kind and number come from the lexicon; an unknown surface
// is an error. Zero markers attach to the token that follows them.
Document ParseDocument(std::string_view text,
                       const Lexicon &lexicon = Lexicon::Default());

// Writes a document back in the corpus format. Attributes are emitted in
// the order id, kind, num, ant; everything else reproduces the source.
std::string SerializeDocument(const Document &doc);

Document LoadDocument(const std::string &path,
                      const Lexicon &lexicon = Lexicon::Default());

}  // namespace anafor

#endif  // ANAFOR_ANNOTATION_IO_H_
