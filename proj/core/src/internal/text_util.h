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

#ifndef ANAFOR_INTERNAL_TEXT_UTIL_H_
#define ANAFOR_INTERNAL_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace anafor {
namespace internal {

std::string_view Trim(std::string_view s);

// Splits on '\n', dropping a trailing '\r' from each line. A final empty
// line after the last newline is not returned.
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string_view> Split(std::string_view s, char sep);

std::string_view StripBom(std::string_view text);

bool ReadFile(const std::string &path, std::string *contents);

// Parses a finite double covering the whole string.
bool ParseDouble(std::string_view s, double *value);

// Fixed-point formatting ("%.*f").
std::string FormatFixed(double value, int decimals);

// Shortest representation that parses back to the same double.
std::string FormatShortest(double value);

}  // namespace internal
}  // namespace anafor

#endif  // ANAFOR_INTERNAL_TEXT_UTIL_H_
