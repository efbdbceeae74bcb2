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

#include "anafor/candidates.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace anafor {

namespace {

bool IsConnective(const std::string &surface) {
  return surface == "ve" || surface == "ile";
}

Candidate MakeCandidate(std::vector<NameOccurrence> members,
                        CandidateKind kind, const Document &doc) {
  Candidate c;
  c.kind = kind;
  c.anchor = members.back().token_index;
  c.sentence_index = doc.SentenceOf(c.anchor);
  if (kind == CandidateKind::kSimple) {
    c.number = members.front().plural_suffix ? GrammaticalNumber::kPlural
                                             : GrammaticalNumber::kSingular;
  } else {
    c.number = GrammaticalNumber::kPlural;
  }
  c.members = std::move(members);
  return c;
}

auto OrderKey(const Candidate &c) {
  return std::make_tuple(c.anchor, static_cast<int>(c.kind),
                         c.members.front().token_index);
}

void SortCandidates(std::vector<Candidate> *cands) {
  std::stable_sort(cands->begin(), cands->end(),
                   [](const Candidate &a, const Candidate &b) {
                     return OrderKey(a) < OrderKey(b);
                   });
}

}  // namespace

const char *ToString(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kSimple:
      return "simple";
    case CandidateKind::kCompound:
      return "compound";
    case CandidateKind::kGeneratedSet:
      return "set";
  }
  return "?";
}

NameSet Candidate::Bases() const {
  NameSet bases;
  for (const auto &m : members) bases.insert(m.base);
  return bases;
}

std::string Candidate::Label(std::string_view joiner) const {
  std::string label;
  for (const auto &m : members) {
    if (!label.empty()) label.append(joiner);
    label.append(m.base);
  }
  return label;
}

std::vector<NameOccurrence> NamesInScope(const Document &doc,
                                         const PronounMention &p,
                                         const NameDictionary &dict,
                                         const SearchScope &scope,
                                         const Lexicon &lexicon) {
  std::vector<NameOccurrence> names;
  const std::size_t sentence = doc.SentenceOf(p);
  const std::size_t first_sentence =
      sentence > scope.max_back_sentences ? sentence - scope.max_back_sentences
                                          : 0;
  // Sentences are contiguous, so the window is one token range.
  const std::size_t begin = doc.sentences()[first_sentence].first;
  for (std::size_t i = begin; i < p.position; ++i) {
    if (auto occ = MatchName(doc.token(i), dict, lexicon)) {
      names.push_back(std::move(*occ));
    }
  }
  return names;
}

std::vector<Candidate> ExtractCandidates(const Document &doc,
                                         const PronounMention &p,
                                         const NameDictionary &dict,
                                         const SearchScope &scope,
                                         const Lexicon &lexicon) {
  const std::vector<NameOccurrence> names =
      NamesInScope(doc, p, dict, scope, lexicon);
  std::vector<Candidate> cands;
  std::set<std::pair<std::string, std::size_t>> seen;
  for (const auto &occ : names) {
    if (seen.emplace(occ.base, occ.token_index).second) {
      cands.push_back(MakeCandidate({occ}, CandidateKind::kSimple, doc));
    }
  }

  std::size_t i = 0;
  while (i < names.size()) {
    std::size_t j = i;
    while (j + 1 < names.size() &&
           names[j + 1].token_index == names[j].token_index + 2 &&
           IsConnective(doc.token(names[j].token_index + 1).surface)) {
      ++j;
    }
    if (j > i) {
      std::vector<NameOccurrence> members(names.begin() + i,
                                          names.begin() + j + 1);
      cands.push_back(
          MakeCandidate(std::move(members), CandidateKind::kCompound, doc));
    }
    i = j + 1;
  }
  SortCandidates(&cands);
  return cands;
}

std::vector<Candidate> GenerateSets(const Document &doc,
                                    const PronounMention &p,
                                    const NameDictionary &dict,
                                    const SearchScope &scope,
                                    const Lexicon &lexicon) {
  const std::vector<NameOccurrence> names =
      NamesInScope(doc, p, dict, scope, lexicon);
  std::vector<Candidate> sets;
  std::size_t i = 0;
  while (i < names.size()) {
    const std::size_t sentence = doc.SentenceOf(names[i].token_index);
    std::vector<NameOccurrence> members;
    std::set<std::string> bases;
    for (; i < names.size() && doc.SentenceOf(names[i].token_index) == sentence;
         ++i) {
      if (bases.insert(names[i].base).second) members.push_back(names[i]);
    }
    if (members.size() >= 2) {
      sets.push_back(
          MakeCandidate(std::move(members), CandidateKind::kGeneratedSet, doc));
    }
  }
  return sets;
}

std::vector<Candidate> CollectCandidates(const Document &doc,
                                         const PronounMention &p,
                                         const NameDictionary &dict,
                                         const SearchScope &scope,
                                         const Lexicon &lexicon) {
  std::vector<Candidate> cands = ExtractCandidates(doc, p, dict, scope, lexicon);
  if (p.number != GrammaticalNumber::kPlural) return cands;
  const bool has_plural =
      std::any_of(cands.begin(), cands.end(), [](const Candidate &c) {
        return c.number == GrammaticalNumber::kPlural;
      });
  if (has_plural) return cands;
  for (auto &set : GenerateSets(doc, p, dict, scope, lexicon)) {
    cands.push_back(std::move(set));
  }
  SortCandidates(&cands);
  return cands;
}

std::vector<Candidate> ApplyConstraints(const Document &doc,
                                        const PronounMention &p,
                                        std::vector<Candidate> candidates) {
  std::erase_if(candidates,
                [&](const Candidate &c) { return c.number != p.number; });

  if (p.kind == PronounKind::kPersonal) {
    const std::size_t sentence = doc.SentenceOf(p);
    std::erase_if(candidates, [&](const Candidate &c) {
      return c.sentence_index == sentence;
    });
    return candidates;
  }

  if (candidates.empty()) return candidates;
  // Nearest = largest anchor; on equal anchors the later-listed candidate
  // (the compound over its own last member) wins.
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].anchor >= candidates[best].anchor) best = i;
  }
  return {std::move(candidates[best])};
}

}  // namespace anafor
