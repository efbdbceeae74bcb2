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

#ifndef ANAFOR_RESOLVER_H_
#define ANAFOR_RESOLVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anafor/candidates.h"
#include "anafor/dictionary.h"
#include "anafor/morph.h"
#include "anafor/preferences.h"
#include "anafor/text_model.h"

namespace anafor {

struct ScoredCandidate {
  Candidate candidate;
  // Absent for baseline selections, which do not score.
  std::optional<PreferenceVector> features;
  double score = 0.0;
};

// Outcome for one pronoun: either an antecedent chosen among the surviving
// candidates, or ambiguous when no candidate survived the constraints.
struct Resolution {
  int pronoun_id = 0;
  // Surviving candidates in candidate order.
  std::vector<ScoredCandidate> trace;
  // Index into `trace` of the chosen antecedent.
  std::optional<std::size_t> chosen;

  bool ambiguous() const { return !chosen.has_value(); }
  const ScoredCandidate &selected() const { return trace.at(*chosen); }
  NameSet antecedent() const {
    return chosen ? selected().candidate.Bases() : NameSet{};
  }
};

struct ResolvedDocument {
  std::vector<Resolution> resolutions;
  // Input with each resolved pronoun replaced by its antecedent names.
  Document paraphrased;
};

struct ResolverOptions {
  PreferenceWeights weights = PreferenceWeights::Defaults();
  SearchScope scope;
  const Lexicon *lexicon = &Lexicon::Default();
};

// Index of the highest score; near-equal scores (relative 1e-9) tie and
// go to the largest anchor, then to the later index.
std::size_t SelectMostSalient(std::span<const double> scores,
                              std::span<const std::size_t> anchors);

// Index of the largest anchor (later index on equal anchors).
std::size_t SelectMostRecent(std::span<const std::size_t> anchors);

Resolution ResolvePronoun(const Document &doc, const PronounMention &p,
                          const NameDictionary &dict,
                          const ResolutionHistory &history,
                          const ResolverOptions &options = {});

// Left-to-right resolution. Every resolved pronoun is replaced in the
// working text by its antecedent (names joined by "ve") before the next
// pronoun is handled; zero-pronoun antecedents feed the history used by
// the zero-antecedent preference.
ResolvedDocument ResolveDocument(const Document &doc,
                                 const NameDictionary &dict,
                                 const ResolverOptions &options = {});

// Same pipeline, but the most recent survivor is always chosen.
ResolvedDocument BaselineResolveDocument(const Document &doc,
                                         const NameDictionary &dict,
                                         const ResolverOptions &options = {});

// Replacement tokens for a candidate: "Ali" or "Ahmet ve Fatma".
std::vector<std::string> ReplacementTokens(const Candidate &c);

// Trace records, one line per pronoun:
//   id <TAB> resolved|ambiguous <TAB> names|- <TAB> score|- <TAB> candidates
// Names are ';'-joined and sorted. Candidates are comma-separated entries
// `Name+Name@anchor:bits=score`, bits and score '-' for baseline runs; the
// chosen entry is prefixed with '*'.
std::string FormatTraceLine(const Resolution &r);
std::string FormatTrace(const std::vector<Resolution> &resolutions);

struct TraceRecord {
  int pronoun_id = 0;
  bool resolved = false;
  NameSet antecedent;

  bool operator==(const TraceRecord &other) const = default;
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<TraceRecord> ParseTrace(std::string_view text);
std::vector<TraceRecord> ToRecords(const std::vector<Resolution> &resolutions);

}  // namespace anafor

#endif  // ANAFOR_RESOLVER_H_
