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

#ifndef ANAFOR_DICTIONARY_H_
#define ANAFOR_DICTIONARY_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anafor {

class DictionaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gazetteer of proper person names. Entries are exact, Turkish-cased base
// forms ("Ayşe", "İsmail"); lookups are case-sensitive.
class NameDictionary {
 public:
  NameDictionary() = default;
  NameDictionary(std::initializer_list<std::string> names);

  // Adds a name. Throws DictionaryError unless the name is a single
  // non-empty word starting with an uppercase letter.
  void Add(std::string name);

  bool Contains(std::string_view name) const {
    return entries_.find(name) != entries_.end();
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::set<std::string, std::less<>> &entries() const {
    return entries_;
  }

 private:
  std::set<std::string, std::less<>> entries_;
};

// One name per line; blank lines and '#' comments are skipped, surrounding
// whitespace is trimmed and duplicates collapse.
NameDictionary ParseDictionary(std::string_view text);
NameDictionary LoadDictionary(const std::string &path);

}  // namespace anafor

#endif  // ANAFOR_DICTIONARY_H_
