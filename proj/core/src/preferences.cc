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

#include "anafor/preferences.h"

#include <algorithm>
#include <cmath>

#include "internal/text_util.h"

namespace anafor {

namespace {

constexpr std::array<std::string_view, kNumPreferences> kNames = {
    "quoted_match",      "recency",    "nominative",  "first_np",
    "predicate_nominal", "repetition", "punctuation", "zero_antecedent_history",
};

}  // namespace

std::string_view PreferenceName(Preference pref) {
  return kNames[static_cast<std::size_t>(pref)];
}

std::string_view PreferenceName(std::size_t index) { return kNames.at(index); }

std::size_t PreferenceVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string PreferenceVector::ToString() const {
  std::string s;
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

PreferenceWeights::PreferenceWeights(
    const std::array<double, kNumPreferences> &values)
    : values_(values) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw WeightsError("weights must be finite");
  }
}

PreferenceWeights PreferenceWeights::Defaults() {
  return PreferenceWeights({2.20, 2.15, 1.85, 1.40, 1.20, 1.20, 1.15, 1.05});
}

PreferenceWeights PreferenceWeights::Uniform(double value) {
  std::array<double, kNumPreferences> values;
  values.fill(value);
  return PreferenceWeights(values);
}

PreferenceWeights PreferenceWeights::operator+(
    const PreferenceWeights &other) const {
  PreferenceWeights sum;
  for (std::size_t i = 0; i < kNumPreferences; ++i) {
    sum.values_[i] = values_[i] + other.values_[i];
  }
  return sum;
}

PreferenceWeights PreferenceWeights::operator*(double factor) const {
  PreferenceWeights scaled;
  for (std::size_t i = 0; i < kNumPreferences; ++i) {
    scaled.values_[i] = values_[i] * factor;
  }
  return scaled;
}

PreferenceWeights ParseWeights(std::string_view text) {
  std::array<double, kNumPreferences> values{};
  std::array<bool, kNumPreferences> seen{};
  int line_number = 0;
  for (std::string_view line : internal::SplitLines(internal::StripBom(text))) {
    ++line_number;
    line = internal::Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "weights line " + std::to_string(line_number);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw WeightsError(where + ": expected 'name = value'");
    }
    const std::string_view name = internal::Trim(line.substr(0, eq));
    const std::string_view value = internal::Trim(line.substr(eq + 1));
    const auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end()) {
      throw WeightsError(where + ": unknown preference '" + std::string(name) +
                         "'");
    }
    const auto index = static_cast<std::size_t>(it - kNames.begin());
    if (seen[index]) {
      throw WeightsError(where + ": duplicate preference '" +
                         std::string(name) + "'");
    }
    if (!internal::ParseDouble(value, &values[index])) {
      throw WeightsError(where + ": invalid value '" + std::string(value) +
                         "'");
    }
    seen[index] = true;
  }
  for (std::size_t i = 0; i < kNumPreferences; ++i) {
    if (!seen[i]) {
      throw WeightsError("weights file is missing '" +
                         std::string(kNames[i]) + "'");
    }
  }
  return PreferenceWeights(values);
}

PreferenceWeights LoadWeights(const std::string &path) {
  std::string text;
  if (!internal::ReadFile(path, &text)) {
    throw WeightsError("cannot read weights " + path);
  }
  try {
    return ParseWeights(text);
  } catch (const WeightsError &e) {
    throw WeightsError(path + ": " + e.what());
  }
}

std::string FormatWeights(const PreferenceWeights &weights) {
  std::string out;
  for (std::size_t i = 0; i < kNumPreferences; ++i) {
    out.append(kNames[i]);
    out.append(" = ");
    out.append(internal::FormatShortest(weights[i]));
    out.push_back('\n');
  }
  return out;
}

double Score(const PreferenceVector &v, const PreferenceWeights &w) {
  double total = 0.0;
  for (std::size_t i = 0; i < kNumPreferences; ++i) {
    if (v[i]) total += w[i];
  }
  return total;
}

bool ResolutionHistory::ContainsBefore(const NameSet &names,
                                       std::size_t sentence) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry &e) {
    return e.sentence < sentence && e.names == names;
  });
}

FeatureExtractor::FeatureExtractor(
    const Document &doc, const PronounMention &p,
    const std::vector<Candidate> &survivors, const ResolutionHistory &history,
    const std::vector<NameOccurrence> &scope_names)
    : doc_(doc),
      pronoun_(p),
      history_(history),
      pronoun_quoted_(doc.IsQuoted(p)),
      pronoun_sentence_(doc.SentenceOf(p)) {
  for (const auto &c : survivors) {
    nearest_sentence_ = std::max(nearest_sentence_, c.sentence_index);
  }
  for (const auto &occ : scope_names) ++name_counts_[occ.base];
}

PreferenceVector FeatureExtractor::Compute(const Candidate &c) const {
  PreferenceVector v;
  const Token &anchor = doc_.token(c.anchor);

  v.set(Preference::kQuotedMatch, anchor.quoted == pronoun_quoted_);
  v.set(Preference::kRecency, c.sentence_index == nearest_sentence_);
  v.set(Preference::kNominative,
        std::all_of(c.members.begin(), c.members.end(), IsNominative));
  v.set(Preference::kFirstNp, doc_.FirstContentToken(c.sentence_index) ==
                                  c.members.front().token_index);
  v.set(Preference::kPredicateNominal,
        std::any_of(c.members.begin(), c.members.end(),
                    [](const NameOccurrence &m) { return m.copular_suffix; }));
  v.set(Preference::kRepetition,
        std::all_of(c.members.begin(), c.members.end(),
                    [&](const NameOccurrence &m) {
                      auto it = name_counts_.find(m.base);
                      return it != name_counts_.end() && it->second >= 2;
                    }));
  v.set(Preference::kPunctuation, anchor.followed_by_comma);
  v.set(Preference::kZeroAntecedentHistory,
        pronoun_.is_zero() &&
            history_.ContainsBefore(c.Bases(), pronoun_sentence_));
  return v;
}

PreferenceVector ComputeFeatures(const Document &doc, const PronounMention &p,
                                 const Candidate &c,
                                 const std::vector<Candidate> &survivors,
                                 const ResolutionHistory &history,
                                 const NameDictionary &dict,
                                 const SearchScope &scope,
                                 const Lexicon &lexicon) {
  const FeatureExtractor extractor(
      doc, p, survivors, history, NamesInScope(doc, p, dict, scope, lexicon));
  return extractor.Compute(c);
}

}  // namespace anafor
