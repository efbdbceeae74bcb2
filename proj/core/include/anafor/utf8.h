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

#ifndef ANAFOR_UTF8_H_
#define ANAFOR_UTF8_H_

#include <string>
#include <string_view>

namespace anafor {
namespace utf8 {

// Returns true if the bytes form well-formed UTF-8 (no overlongs, no
// surrogates, nothing above U+10FFFF).
bool IsValid(std::string_view text);

// Decodes the code point starting at text[pos] and advances pos. Invalid
// bytes decode to U+FFFD and advance by one.
char32_t Next(std::string_view text, std::size_t &pos);

void Append(std::string &out, char32_t cp);

// Turkish casing: I <-> ı and İ <-> i, otherwise Latin-1/Latin Extended-A
// letters used by Turkish plus ASCII.
char32_t ToLowerTurkish(char32_t cp);
char32_t ToUpperTurkish(char32_t cp);
std::string ToLowerTurkish(std::string_view text);

bool IsUpperTurkish(char32_t cp);

// True if the first code point of text is an uppercase letter.
bool StartsUpper(std::string_view text);

bool IsWhitespace(char32_t cp);

}  // namespace utf8
}  // namespace anafor

#endif  // ANAFOR_UTF8_H_
