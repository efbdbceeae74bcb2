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

#include "anafor/utf8.h"
#include "internal/text_util.h"

namespace anafor {

NameDictionary::NameDictionary(std::initializer_list<std::string> names) {
  for (const auto &name : names) Add(name);
}

void NameDictionary::Add(std::string name) {
  if (name.empty()) throw DictionaryError("empty name");
  std::size_t pos = 0;
  while (pos < name.size()) {
    const char32_t cp = utf8::Next(name, pos);
    if (utf8::IsWhitespace(cp)) {
      throw DictionaryError("name '" + name + "' contains whitespace");
    }
    if (cp == U'\'' || cp == U'’') {
      throw DictionaryError("name '" + name + "' contains an apostrophe");
    }
  }
  if (!utf8::StartsUpper(name)) {
    throw DictionaryError("name '" + name + "' is not capitalized");
  }
  entries_.insert(std::move(name));
}

NameDictionary ParseDictionary(std::string_view text) {
  text = internal::StripBom(text);
  if (!utf8::IsValid(text)) throw DictionaryError("dictionary is not UTF-8");
  NameDictionary dict;
  int line_number = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_number;
    line = internal::Trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      dict.Add(std::string(line));
    } catch (const DictionaryError &e) {
      throw DictionaryError("line " + std::to_string(line_number) + ": " +
                            e.what());
    }
  }
  return dict;
}

NameDictionary LoadDictionary(const std::string &path) {
  std::string text;
  if (!internal::ReadFile(path, &text)) {
    throw DictionaryError("cannot read dictionary " + path);
  }
  try {
    return ParseDictionary(text);
  } catch (const DictionaryError &e) {
    throw DictionaryError(path + ": " + e.what());
  }
}

}  // namespace anafor
