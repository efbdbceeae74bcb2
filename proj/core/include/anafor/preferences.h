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

#ifndef ANAFOR_PREFERENCES_H_
#define ANAFOR_PREFERENCES_H_

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anafor/candidates.h"
#include "anafor/text_model.h"

namespace anafor {

// Soft preferences, in serialization order.
enum class Preference {
  kQuotedMatch,
  kRecency,
  kNominative,
  kFirstNp,
  kPredicateNominal,
  kRepetition,
  kPunctuation,
  kZeroAntecedentHistory,
};

inline constexpr std::size_t kNumPreferences = 8;

// Stable identifiers used in weights files ("recency", "first_np", ...).
std::string_view PreferenceName(Preference pref);
std::string_view PreferenceName(std::size_t index);

class PreferenceVector {
 public:
  PreferenceVector() { bits_.fill(false); }

  bool operator[](Preference p) const {
    return bits_[static_cast<std::size_t>(p)];
  }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(Preference p, bool value = true) {
    bits_[static_cast<std::size_t>(p)] = value;
  }
  void set(std::size_t i, bool value = true) { bits_[i] = value; }

  std::size_t count() const;
  // "10110010": one digit per preference in order.
  std::string ToString() const;

  bool operator==(const PreferenceVector &other) const = default;

 private:
  std::array<bool, kNumPreferences> bits_;
};

class WeightsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreferenceWeights {
 public:
  // All zeros.
  PreferenceWeights() { values_.fill(0.0); }
  explicit PreferenceWeights(const std::array<double, kNumPreferences> &values);

  // The optimized scores: 2.20 2.15 1.85 1.40 1.20 1.20 1.15 1.05.
  static PreferenceWeights Defaults();
  static PreferenceWeights Uniform(double value);

  double operator[](Preference p) const {
    return values_[static_cast<std::size_t>(p)];
  }
  double operator[](std::size_t i) const { return values_[i]; }
  double &operator[](std::size_t i) { return values_[i]; }

  const std::array<double, kNumPreferences> &values() const { return values_; }

  PreferenceWeights operator+(const PreferenceWeights &other) const;
  PreferenceWeights operator*(double factor) const;

  bool operator==(const PreferenceWeights &other) const = default;

 private:
  std::array<double, kNumPreferences> values_;
};

// Weights file: one `name = value` line per preference, '#' comments.
// Every name must appear exactly once.
PreferenceWeights ParseWeights(std::string_view text);
PreferenceWeights LoadWeights(const std::string &path);
std::string FormatWeights(const PreferenceWeights &weights);

double Score(const PreferenceVector &v, const PreferenceWeights &w);

// Antecedents chosen for zero pronouns so far in one document pass.
class ResolutionHistory {
 public:
  void Record(NameSet antecedent, std::size_t sentence) {
    entries_.push_back({std::move(antecedent), sentence});
  }

  // True if `names` was the antecedent of a zero pronoun located in a
  // sentence before `sentence`.
  bool ContainsBefore(const NameSet &names, std::size_t sentence) const;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    NameSet names;
    std::size_t sentence;
  };
  std::vector<Entry> entries_;
};

// Computes preference vectors for the surviving candidates of one pronoun.
// `scope_names` are the name occurrences of the search window (see
// NamesInScope), used for repetition counts.
class FeatureExtractor {
 public:
  FeatureExtractor(const Document &doc, const PronounMention &p,
                   const std::vector<Candidate> &survivors,
                   const ResolutionHistory &history,
                   const std::vector<NameOccurrence> &scope_names);

  PreferenceVector Compute(const Candidate &c) const;

 private:
  const Document &doc_;
  const PronounMention &pronoun_;
  const ResolutionHistory &history_;
  bool pronoun_quoted_;
  std::size_t pronoun_sentence_;
  std::size_t nearest_sentence_ = 0;
  std::map<std::string, int, std::less<>> name_counts_;
};

// One-shot convenience over FeatureExtractor.
PreferenceVector ComputeFeatures(const Document &doc, const PronounMention &p,
                                 const Candidate &c,
                                 const std::vector<Candidate> &survivors,
                                 const ResolutionHistory &history,
                                 const NameDictionary &dict,
                                 const SearchScope &scope,
                                 const Lexicon &lexicon = Lexicon::Default());

}  // namespace anafor

#endif  // ANAFOR_PREFERENCES_H_
