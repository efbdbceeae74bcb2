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

#ifndef ANAFOR_EVALUATOR_H_
#define ANAFOR_EVALUATOR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "anafor/resolver.h"
#include "anafor/text_model.h"

namespace anafor {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-pronoun link accuracy.
//   recall    = correct / identified
//   precision = correct / attempted
// where identified counts gold-linked pronouns and attempted excludes the
// ambiguous ones. Ratios are 0 when their denominator is 0.
struct Metrics {
  std::size_t identified = 0;
  std::size_t attempted = 0;
  std::size_t correct = 0;
  double recall = 0.0;
  double precision = 0.0;

  static Metrics FromCounts(std::size_t identified, std::size_t ambiguous,
                            std::size_t correct);

  std::size_t ambiguous() const { return identified - attempted; }

  // Sums counts (corpus-level micro average).
  Metrics &operator+=(const Metrics &other);
};

// Scores resolutions against the gold links of `gold`. Every gold-linked
// pronoun needs a record; records for unknown ids are an error, records
// for unlinked pronouns are ignored. Plural links compare as sets.
Metrics Evaluate(const std::vector<TraceRecord> &records,
                 const Document &gold);
Metrics Evaluate(const ResolvedDocument &resolved, const Document &gold);

enum class ReportFormat { kText, kKeyValue };

// Percentage with one decimal, e.g. 0.85263 -> 85.3.
double RoundedPercent(double ratio);

std::string FormatMetrics(const Metrics &m, ReportFormat format);

struct Comparison {
  Metrics system;
  Metrics baseline;
  // System minus baseline, in percentage points of the rounded figures.
  double recall_delta = 0.0;
  double precision_delta = 0.0;
};

Comparison Compare(const Metrics &system, const Metrics &baseline);
std::string FormatComparison(const Comparison &c, ReportFormat format);

}  // namespace anafor

#endif  // ANAFOR_EVALUATOR_H_
