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

#include "anafor/trainer.h"

#include <algorithm>
#include <cmath>

#include "anafor/resolver.h"

namespace anafor {

namespace {

// Replacement for a gold link: the candidate's member order when a survivor
// matches, otherwise the sorted gold names.
std::vector<std::string> GoldReplacement(const NameSet &gold,
                                         const Candidate *match) {
  if (match != nullptr) return ReplacementTokens(*match);
  std::vector<std::string> tokens;
  for (const auto &name : gold) {
    if (!tokens.empty()) tokens.emplace_back("ve");
    tokens.push_back(name);
  }
  return tokens;
}

}  // namespace

TrainingSet BuildInstances(const std::vector<Document> &corpus,
                           const NameDictionary &dict,
                           const SearchScope &scope, const Lexicon &lexicon) {
  TrainingSet set;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const Document &doc = corpus[d];
    const bool linked =
        std::any_of(doc.pronouns().begin(), doc.pronouns().end(),
                    [](const PronounMention &p) {
                      return p.gold_antecedent.has_value();
                    });
    if (!linked) {
      throw TrainingError("document " + std::to_string(d) +
                          " has no gold antecedent links");
    }

    Document work = doc;
    ResolutionHistory history;
    std::vector<int> ids;
    for (const auto &p : doc.pronouns()) ids.push_back(p.id);
    for (int id : ids) {
      const PronounMention p = *work.FindPronoun(id);
      if (!p.gold_antecedent) {
        ++set.unlinked;
        continue;
      }
      const NameSet &gold = *p.gold_antecedent;
      const std::vector<Candidate> survivors = ApplyConstraints(
          work, p, CollectCandidates(work, p, dict, scope, lexicon));

      TrainingInstance instance;
      instance.pronoun_id = id;
      const FeatureExtractor extractor(
          work, p, survivors, history,
          NamesInScope(work, p, dict, scope, lexicon));
      const Candidate *match = nullptr;
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        instance.features.push_back(extractor.Compute(survivors[i]));
        instance.anchors.push_back(survivors[i].anchor);
        const bool correct = survivors[i].Bases() == gold;
        instance.correct.push_back(correct);
        if (correct) {
          instance.gold = i;
          match = &survivors[i];
        }
      }
      if (match == nullptr) {
        ++set.skipped;
      } else {
        set.instances.push_back(std::move(instance));
      }

      const std::size_t sentence = work.SentenceOf(p);
      work = work.ReplacePronoun(id, GoldReplacement(gold, match));
      if (p.is_zero()) history.Record(gold, sentence);
    }
  }
  return set;
}

std::size_t Predict(const TrainingInstance &instance,
                    const PreferenceWeights &weights) {
  std::vector<double> scores;
  scores.reserve(instance.features.size());
  for (const auto &f : instance.features) scores.push_back(Score(f, weights));
  return SelectMostSalient(scores, instance.anchors);
}

TrainReport Train(const std::vector<TrainingInstance> &instances,
                  const TrainConfig &config) {
  if (!std::isfinite(config.learning_rate) || config.learning_rate < 0) {
    throw TrainingError("learning rate must be a finite non-negative number");
  }
  if (config.max_epochs < 0) throw TrainingError("negative epoch limit");
  for (const auto &instance : instances) {
    const std::size_t n = instance.features.size();
    if (n == 0 || instance.anchors.size() != n || instance.correct.size() != n ||
        instance.gold >= n || !instance.correct[instance.gold]) {
      throw TrainingError("malformed training instance for pronoun " +
                          std::to_string(instance.pronoun_id));
    }
  }
  TrainReport report;
  report.weights = config.initial;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::size_t errors = 0;
    for (const auto &instance : instances) {
      const std::size_t predicted = Predict(instance, report.weights);
      if (instance.correct[predicted]) continue;
      ++errors;
      const PreferenceVector &gold = instance.features[instance.gold];
      const PreferenceVector &guess = instance.features[predicted];
      for (std::size_t k = 0; k < kNumPreferences; ++k) {
        const int delta = static_cast<int>(gold[k]) - static_cast<int>(guess[k]);
        report.weights[k] += config.learning_rate * delta;
      }
    }
    report.epochs = epoch + 1;
    report.final_errors = errors;
    report.errors_per_epoch.push_back(errors);
    if (errors == 0) break;
  }
  return report;
}

}  // namespace anafor
