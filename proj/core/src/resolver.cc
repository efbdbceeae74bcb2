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

#include "anafor/resolver.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "internal/text_util.h"

namespace anafor {

namespace {

enum class Selection { kSalience, kRecency };

bool NearlyEqual(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= 1e-9 * scale;
}

Resolution SelectByRecency(int id, std::vector<Candidate> survivors) {
  Resolution r;
  r.pronoun_id = id;
  std::vector<std::size_t> anchors;
  for (auto &c : survivors) {
    anchors.push_back(c.anchor);
    r.trace.push_back({std::move(c), std::nullopt, 0.0});
  }
  if (!anchors.empty()) r.chosen = SelectMostRecent(anchors);
  return r;
}

ResolvedDocument Run(const Document &doc, const NameDictionary &dict,
                     const ResolverOptions &options, Selection selection) {
  ResolvedDocument result;
  Document work = doc;
  ResolutionHistory history;
  std::vector<int> ids;
  for (const auto &p : doc.pronouns()) ids.push_back(p.id);

  for (int id : ids) {
    const PronounMention p = *work.FindPronoun(id);
    Resolution r;
    if (selection == Selection::kSalience) {
      r = ResolvePronoun(work, p, dict, history, options);
    } else {
      r = SelectByRecency(
          id, ApplyConstraints(work, p,
                               CollectCandidates(work, p, dict, options.scope,
                                                 *options.lexicon)));
    }
    if (!r.ambiguous()) {
      const std::size_t sentence = work.SentenceOf(p);
      work = work.ReplacePronoun(id, ReplacementTokens(r.selected().candidate));
      if (p.is_zero()) history.Record(r.antecedent(), sentence);
    }
    result.resolutions.push_back(std::move(r));
  }
  result.paraphrased = std::move(work);
  return result;
}

std::string FormatCandidate(const ScoredCandidate &sc, bool chosen) {
  std::string out;
  if (chosen) out += '*';
  out += sc.candidate.Label("+");
  out += '@';
  out += std::to_string(sc.candidate.anchor);
  out += ':';
  if (sc.features) {
    out += sc.features->ToString();
    out += '=';
    out += internal::FormatFixed(sc.score, 4);
  } else {
    out += "-=-";
  }
  return out;
}

}  // namespace

std::size_t SelectMostSalient(std::span<const double> scores,
                              std::span<const std::size_t> anchors) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (NearlyEqual(scores[i], scores[best])) {
      if (anchors[i] >= anchors[best]) best = i;
    } else if (scores[i] > scores[best]) {
      best = i;
    }
  }
  return best;
}

std::size_t SelectMostRecent(std::span<const std::size_t> anchors) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (anchors[i] >= anchors[best]) best = i;
  }
  return best;
}

Resolution ResolvePronoun(const Document &doc, const PronounMention &p,
                          const NameDictionary &dict,
                          const ResolutionHistory &history,
                          const ResolverOptions &options) {
  const Lexicon &lexicon = *options.lexicon;
  std::vector<Candidate> survivors = ApplyConstraints(
      doc, p, CollectCandidates(doc, p, dict, options.scope, lexicon));

  Resolution r;
  r.pronoun_id = p.id;
  if (survivors.empty()) return r;

  const FeatureExtractor extractor(
      doc, p, survivors, history,
      NamesInScope(doc, p, dict, options.scope, lexicon));
  std::vector<double> scores;
  std::vector<std::size_t> anchors;
  for (auto &c : survivors) {
    PreferenceVector v = extractor.Compute(c);
    const double score = Score(v, options.weights);
    scores.push_back(score);
    anchors.push_back(c.anchor);
    r.trace.push_back({std::move(c), v, score});
  }
  r.chosen = SelectMostSalient(scores, anchors);
  return r;
}

ResolvedDocument ResolveDocument(const Document &doc,
                                 const NameDictionary &dict,
                                 const ResolverOptions &options) {
  return Run(doc, dict, options, Selection::kSalience);
}

ResolvedDocument BaselineResolveDocument(const Document &doc,
                                         const NameDictionary &dict,
                                         const ResolverOptions &options) {
  return Run(doc, dict, options, Selection::kRecency);
}

std::vector<std::string> ReplacementTokens(const Candidate &c) {
  std::vector<std::string> tokens;
  for (const auto &m : c.members) {
    if (!tokens.empty()) tokens.emplace_back("ve");
    tokens.push_back(m.base);
  }
  return tokens;
}

std::string FormatTraceLine(const Resolution &r) {
  std::string line = std::to_string(r.pronoun_id);
  line += '\t';
  if (r.ambiguous()) {
    line += "ambiguous\t-\t-\t";
  } else {
    const ScoredCandidate &sc = r.selected();
    line += "resolved\t";
    line += JoinNames(r.antecedent());
    line += '\t';
    line += sc.features ? internal::FormatFixed(sc.score, 4) : "-";
    line += '\t';
  }
  if (r.trace.empty()) {
    line += '-';
  } else {
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      if (i > 0) line += ',';
      line += FormatCandidate(r.trace[i], r.chosen == i);
    }
  }
  return line;
}

std::string FormatTrace(const std::vector<Resolution> &resolutions) {
  std::string out = "# id\toutcome\tantecedent\tscore\tcandidates\n";
  for (const auto &r : resolutions) {
    out += FormatTraceLine(r);
    out += '\n';
  }
  return out;
}

std::vector<TraceRecord> ParseTrace(std::string_view text) {
  std::vector<TraceRecord> records;
  std::set<int> ids;
  int line_number = 0;
  for (std::string_view line : internal::SplitLines(text)) {
    ++line_number;
    if (internal::Trim(line).empty() || line.front() == '#') continue;
    const std::string where = "trace line " + std::to_string(line_number);
    const auto fields = internal::Split(line, '\t');
    if (fields.size() < 3) throw TraceError(where + ": too few fields");
    TraceRecord rec;
    const std::string id(fields[0]);
    if (id.empty() || id.size() > 9 ||
        id.find_first_not_of("0123456789") != std::string::npos) {
      throw TraceError(where + ": invalid id '" + id + "'");
    }
    rec.pronoun_id = std::stoi(id);
    if (!ids.insert(rec.pronoun_id).second) {
      throw TraceError(where + ": duplicate id " + id);
    }
    if (fields[1] == "resolved") {
      rec.resolved = true;
      if (fields[2] == "-") {
        throw TraceError(where + ": resolved pronoun without antecedent");
      }
      for (auto name : internal::Split(fields[2], ';')) {
        if (name.empty()) throw TraceError(where + ": empty antecedent name");
        rec.antecedent.emplace(name);
      }
    } else if (fields[1] != "ambiguous") {
      throw TraceError(where + ": unknown outcome '" + std::string(fields[1]) +
                       "'");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TraceRecord> ToRecords(const std::vector<Resolution> &resolutions) {
  std::vector<TraceRecord> records;
  for (const auto &r : resolutions) {
    records.push_back({r.pronoun_id, !r.ambiguous(), r.antecedent()});
  }
  return records;
}

}  // namespace anafor
