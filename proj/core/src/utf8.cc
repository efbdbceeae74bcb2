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

#include "anafor/utf8.h"

namespace anafor {
namespace utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

int SequenceLength(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

// Decodes one sequence; returns false on any malformation.
bool Decode(std::string_view text, std::size_t pos, char32_t *cp, int *len) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  const int n = SequenceLength(lead);
  if (n == 0 || pos + n > text.size()) return false;
  if (n == 1) {
    *cp = lead;
    *len = 1;
    return true;
  }
  char32_t value = lead & (0x7F >> n);
  for (int i = 1; i < n; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) return false;
    value = (value << 6) | (c & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (value < kMin[n]) return false;
  if (value > 0x10FFFF) return false;
  if (value >= 0xD800 && value <= 0xDFFF) return false;
  *cp = value;
  *len = n;
  return true;
}

// U+0100..U+017E, excluding the dotted/dotless I pair and the code points
// without a simple partner.
bool InPairedExtendedA(char32_t cp) {
  if (cp < 0x100 || cp > 0x17E) return false;
  return cp != 0x130 && cp != 0x131 && cp != 0x138 && cp != 0x149 &&
         cp != 0x178;
}

// Uppercase letters sit on even code points up to U+0137 and from U+014A to
// U+0177, and on odd code points in U+0139..U+0148 and U+0179..U+017E.
bool IsExtendedAUpper(char32_t cp) {
  const bool odd_block =
      (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
  return odd_block ? (cp % 2 == 1) : (cp % 2 == 0);
}

}  // namespace

bool IsValid(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    int len;
    if (!Decode(text, pos, &cp, &len)) return false;
    pos += len;
  }
  return true;
}

char32_t Next(std::string_view text, std::size_t &pos) {
  char32_t cp;
  int len;
  if (!Decode(text, pos, &cp, &len)) {
    ++pos;
    return kReplacement;
  }
  pos += len;
  return cp;
}

void Append(std::string &out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t ToLowerTurkish(char32_t cp) {
  if (cp == U'I') return U'ı';
  if (cp == U'İ') return U'i';
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 uppercase block, minus the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A pairs (Ğ/ğ, Ş/ş, ...).
  if (InPairedExtendedA(cp) && IsExtendedAUpper(cp)) return cp + 1;
  return cp;
}

char32_t ToUpperTurkish(char32_t cp) {
  if (cp == U'i') return U'İ';
  if (cp == U'ı') return U'I';
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (InPairedExtendedA(cp) && !IsExtendedAUpper(cp)) return cp - 1;
  return cp;
}

std::string ToLowerTurkish(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) Append(out, ToLowerTurkish(Next(text, pos)));
  return out;
}

bool IsUpperTurkish(char32_t cp) { return ToLowerTurkish(cp) != cp; }

bool StartsUpper(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  return IsUpperTurkish(Next(text, pos));
}

bool IsWhitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0xA0;
}

}  // namespace utf8
}  // namespace anafor
