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

#ifndef ANAFOR_TRAINER_H_
#define ANAFOR_TRAINER_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "anafor/candidates.h"
#include "anafor/dictionary.h"
#include "anafor/morph.h"
#include "anafor/preferences.h"
#include "anafor/text_model.h"

namespace anafor {

// One training example: the preference vectors of a pronoun's surviving
// candidates and which of them carry the gold antecedent.
struct TrainingInstance {
  int pronoun_id = 0;
  std::vector<PreferenceVector> features;
  // Recency anchors, for the resolver's tie rule.
  std::vector<std::size_t> anchors;
  // The most recent survivor whose names equal the gold antecedent.
  std::size_t gold = 0;
  // Survivors whose names equal the gold antecedent (several occurrences of
  // the same name are all correct predictions).
  std::vector<bool> correct;
};

struct TrainingSet {
  std::vector<TrainingInstance> instances;
  // Gold antecedent not among the survivors (including no survivors).
  std::size_t skipped = 0;
  // Pronouns without a gold link.
  std::size_t unlinked = 0;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs candidate extraction and the constraints for every gold-linked
// pronoun. Earlier pronouns are replaced by their gold antecedents, so
// context features (repetition, zero-antecedent history) match what a
// correct resolver would have seen. Throws TrainingError for a document
// with no gold link at all.
TrainingSet BuildInstances(const std::vector<Document> &corpus,
                           const NameDictionary &dict,
                           const SearchScope &scope = {},
                           const Lexicon &lexicon = Lexicon::Default());

struct TrainConfig {
  double learning_rate = 0.05;
  int max_epochs = 100;
  PreferenceWeights initial = PreferenceWeights::Uniform(1.0);
};

struct TrainReport {
  PreferenceWeights weights;
  int epochs = 0;
  std::size_t final_errors = 0;
  // Misclassified instances per epoch.
  std::vector<std::size_t> errors_per_epoch;
};

// Predicted survivor under `weights`, with the resolver's tie rule.
std::size_t Predict(const TrainingInstance &instance,
                    const PreferenceWeights &weights);

// Multiclass delta rule: on a miss, w += lr * (f_gold - f_predicted). Stops
// after the first error-free epoch or after max_epochs.
TrainReport Train(const std::vector<TrainingInstance> &instances,
                  const TrainConfig &config = {});

}  // namespace anafor

#endif  // ANAFOR_TRAINER_H_
