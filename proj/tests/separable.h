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

#ifndef ANAFOR_TESTS_SEPARABLE_H_
#define ANAFOR_TESTS_SEPARABLE_H_

#include <random>
#include <vector>

#include "anafor/trainer.h"

namespace anafor {
namespace testing {

inline PreferenceWeights HiddenWeights() {
  return PreferenceWeights({3.0, -1.0, 2.0, 0.5, -2.0, 1.5, 1.0, -0.5});
}

// Instances labelled by a hidden weight vector with a clear margin, so some
// weight vector classifies every one of them correctly.
inline std::vector<TrainingInstance> SeparableSet(unsigned seed,
                                                  std::size_t count) {
  const PreferenceWeights hidden = HiddenWeights();
  std::mt19937 rng(seed);
  std::bernoulli_distribution bit(0.5);
  std::uniform_int_distribution<int> size(2, 5);
  std::vector<TrainingInstance> out;
  while (out.size() < count) {
    TrainingInstance inst;
    inst.pronoun_id = static_cast<int>(out.size()) + 1;
    const int n = size(rng);
    std::vector<double> scores;
    for (int i = 0; i < n; ++i) {
      PreferenceVector v;
      for (std::size_t k = 0; k < kNumPreferences; ++k) v.set(k, bit(rng));
      inst.features.push_back(v);
      inst.anchors.push_back(static_cast<std::size_t>(i) * 3);
      scores.push_back(Score(v, hidden));
    }
    std::size_t best = 0;
    for (int i = 1; i < n; ++i) {
      if (scores[i] > scores[best]) best = i;
    }
    bool margin = true;
    for (int i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != best &&
          scores[best] - scores[i] < 0.5) {
        margin = false;
      }
    }
    if (!margin) continue;
    inst.gold = best;
    inst.correct.assign(n, false);
    inst.correct[best] = true;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace testing
}  // namespace anafor

#endif  // ANAFOR_TESTS_SEPARABLE_H_
