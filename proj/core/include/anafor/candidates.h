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

#ifndef ANAFOR_CANDIDATES_H_
#define ANAFOR_CANDIDATES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "anafor/dictionary.h"
#include "anafor/morph.h"
#include "anafor/text_model.h"

namespace anafor {

enum class CandidateKind { kSimple, kCompound, kGeneratedSet };

const char *ToString(CandidateKind kind);

// A possible antecedent: one name occurrence, a compound joined by 've' or
// 'ile', or a set built from all names of one sentence.
struct Candidate {
  std::vector<NameOccurrence> members;
  CandidateKind kind = CandidateKind::kSimple;
  GrammaticalNumber number = GrammaticalNumber::kSingular;
  // Token index of the last member; orders candidates by recency.
  std::size_t anchor = 0;
  std::size_t sentence_index = 0;

  NameSet Bases() const;
  // Member bases in document order, e.g. "Ahmet ve Fatma".
  std::string Label(std::string_view joiner = " ve ") const;

  bool operator==(const Candidate &other) const = default;
};

struct SearchScope {
  // Sentences searched before the pronoun's own sentence.
  std::size_t max_back_sentences = 3;
};

// Name occurrences visible from pronoun `p`: every gazetteer match in the
// pronoun's sentence and the `scope` preceding ones, restricted to tokens
// strictly left of the pronoun.
std::vector<NameOccurrence> NamesInScope(
    const Document &doc, const PronounMention &p, const NameDictionary &dict,
    const SearchScope &scope, const Lexicon &lexicon = Lexicon::Default());

// Simple candidates for every in-scope name plus one compound candidate per
// maximal chain "X ve Y (ve Z ...)" / "X ile Y". Sorted by anchor, simple
// before compound on equal anchors.
std::vector<Candidate> ExtractCandidates(
    const Document &doc, const PronounMention &p, const NameDictionary &dict,
    const SearchScope &scope, const Lexicon &lexicon = Lexicon::Default());

// One plural candidate per in-scope sentence holding at least two distinct
// names, made of the first occurrence of each name.
std::vector<Candidate> GenerateSets(
    const Document &doc, const PronounMention &p, const NameDictionary &dict,
    const SearchScope &scope, const Lexicon &lexicon = Lexicon::Default());

// ExtractCandidates, followed by GenerateSets for a plural pronoun when no
// extracted candidate is plural.
std::vector<Candidate> CollectCandidates(
    const Document &doc, const PronounMention &p, const NameDictionary &dict,
    const SearchScope &scope, const Lexicon &lexicon = Lexicon::Default());

// Hard filters, in order: number agreement; personal pronouns drop
// candidates in their own sentence; reflexives keep only the nearest
// remaining candidate.
std::vector<Candidate> ApplyConstraints(const Document &doc,
                                        const PronounMention &p,
                                        std::vector<Candidate> candidates);

}  // namespace anafor

#endif  // ANAFOR_CANDIDATES_H_
