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

#include <random>
#include <string>

#include "anafor/annotation_io.h"
#include "anafor/dictionary.h"
#include "anafor/preferences.h"
#include "anafor/resolver.h"
#include "benchmark/benchmark.h"

namespace anafor {
namespace {

const NameDictionary &Names() {
  static const NameDictionary dict{"Ayşe", "Ahmet", "Fatma", "Ali", "Zerrin",
                                   "Murat", "Zeynep", "Tekin", "Ayla"};
  return dict;
}

// A narrative of `sentences` sentences, roughly one pronoun in three.
std::string Narrative(int sentences) {
  static const char *kNames[] = {"Ayşe", "Ahmet", "Fatma", "Ali", "Murat"};
  static const char *kSuffixes[] = {"", "'yi", "'ye", "'de", "'ydi"};
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> name(0, 4), suffix(0, 4), kind(0, 5);
  std::string text;
  int id = 1;
  for (int s = 0; s < sentences; ++s) {
    switch (kind(rng)) {
      case 0:
        text += "<zero id=\"" + std::to_string(id++) +
                "\" kind=\"pers\" num=\"sg\"/>Eve yürüdü. ";
        break;
      case 1:
        text += std::string(kNames[name(rng)]) + " <pro id=\"" +
                std::to_string(id++) + "\">onu</pro> gördü. ";
        break;
      default:
        text += std::string(kNames[name(rng)]) + ", " + kNames[name(rng)] +
                kSuffixes[suffix(rng)] + " baktı. ";
        break;
    }
  }
  return text;
}

void BM_ParseDocument(benchmark::State &state) {
  const std::string text = Narrative(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ParseDocument(text));
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_ParseDocument)->Arg(50)->Arg(500);

void BM_ResolveDocument(benchmark::State &state) {
  const Document doc = ParseDocument(Narrative(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ResolveDocument(doc, Names()));
  state.SetItemsProcessed(state.iterations() * doc.pronouns().size());
}
BENCHMARK(BM_ResolveDocument)->Arg(50)->Arg(500);

void BM_BaselineResolveDocument(benchmark::State &state) {
  const Document doc = ParseDocument(Narrative(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BaselineResolveDocument(doc, Names()));
  }
  state.SetItemsProcessed(state.iterations() * doc.pronouns().size());
}
BENCHMARK(BM_BaselineResolveDocument)->Arg(500);

void BM_Score(benchmark::State &state) {
  const PreferenceWeights w = PreferenceWeights::Defaults();
  PreferenceVector v;
  v.set(Preference::kRecency);
  v.set(Preference::kNominative);
  v.set(Preference::kRepetition);
  for (auto _ : state) benchmark::DoNotOptimize(Score(v, w));
}
BENCHMARK(BM_Score);

}  // namespace
}  // namespace anafor

BENCHMARK_MAIN();
