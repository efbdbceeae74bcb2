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

#include "anafor/evaluator.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "internal/text_util.h"

namespace anafor {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void Refresh(Metrics *m) {
  m->recall = Ratio(m->correct, m->identified);
  m->precision = Ratio(m->correct, m->attempted);
}

std::string Percent(double ratio) {
  return internal::FormatFixed(RoundedPercent(ratio), 1);
}

std::string Signed(double delta) {
  // Avoid "-0.0" for deltas that round to zero.
  if (std::fabs(delta) < 0.05) delta = 0.0;
  std::string s = internal::FormatFixed(delta, 1);
  return delta >= 0 ? "+" + s : s;
}

std::string Row(const std::string &label, const std::string &a,
                const std::string &b, const std::string &c) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%-10s  %-9s  %-9s  %s\n",
                label.c_str(), a.c_str(), b.c_str(), c.c_str());
  return buffer;
}

}  // namespace

Metrics Metrics::FromCounts(std::size_t identified, std::size_t ambiguous,
                            std::size_t correct) {
  if (ambiguous > identified) {
    throw EvaluationError("more ambiguous pronouns than identified ones");
  }
  Metrics m;
  m.identified = identified;
  m.attempted = identified - ambiguous;
  if (correct > m.attempted) {
    throw EvaluationError("more correct resolutions than attempted ones");
  }
  m.correct = correct;
  Refresh(&m);
  return m;
}

Metrics &Metrics::operator+=(const Metrics &other) {
  identified += other.identified;
  attempted += other.attempted;
  correct += other.correct;
  Refresh(this);
  return *this;
}

Metrics Evaluate(const std::vector<TraceRecord> &records,
                 const Document &gold) {
  std::map<int, const TraceRecord *> by_id;
  for (const auto &r : records) {
    if (!by_id.emplace(r.pronoun_id, &r).second) {
      throw EvaluationError("duplicate resolution for pronoun " +
                            std::to_string(r.pronoun_id));
    }
    if (gold.FindPronoun(r.pronoun_id) == nullptr) {
      throw EvaluationError("resolution for unknown pronoun id " +
                            std::to_string(r.pronoun_id));
    }
  }
  Metrics m;
  for (const auto &p : gold.pronouns()) {
    if (!p.gold_antecedent) continue;
    auto it = by_id.find(p.id);
    if (it == by_id.end()) {
      throw EvaluationError("no resolution for pronoun id " +
                            std::to_string(p.id));
    }
    ++m.identified;
    const TraceRecord &r = *it->second;
    if (!r.resolved) continue;
    ++m.attempted;
    if (r.antecedent == *p.gold_antecedent) ++m.correct;
  }
  Refresh(&m);
  return m;
}

Metrics Evaluate(const ResolvedDocument &resolved, const Document &gold) {
  return Evaluate(ToRecords(resolved.resolutions), gold);
}

double RoundedPercent(double ratio) {
  return std::round(ratio * 1000.0) / 10.0;
}

std::string FormatMetrics(const Metrics &m, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kKeyValue) {
    out += "identified=" + std::to_string(m.identified) + "\n";
    out += "attempted=" + std::to_string(m.attempted) + "\n";
    out += "ambiguous=" + std::to_string(m.ambiguous()) + "\n";
    out += "correct=" + std::to_string(m.correct) + "\n";
    out += "recall=" + Percent(m.recall) + "\n";
    out += "precision=" + Percent(m.precision) + "\n";
    return out;
  }
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "Pronouns identified  %zu\n"
                "Pronouns attempted   %zu\n"
                "Correctly resolved   %zu\n"
                "Recall               %s%%\n"
                "Precision            %s%%\n",
                m.identified, m.attempted, m.correct, Percent(m.recall).c_str(),
                Percent(m.precision).c_str());
  return buffer;
}

Comparison Compare(const Metrics &system, const Metrics &baseline) {
  Comparison c;
  c.system = system;
  c.baseline = baseline;
  c.recall_delta = RoundedPercent(system.recall) - RoundedPercent(baseline.recall);
  c.precision_delta =
      RoundedPercent(system.precision) - RoundedPercent(baseline.precision);
  return c;
}

std::string FormatComparison(const Comparison &c, ReportFormat format) {
  if (format == ReportFormat::kKeyValue) {
    std::string out;
    for (const auto &[prefix, m] :
         {std::pair<std::string, const Metrics *>{"baseline", &c.baseline},
          {"system", &c.system}}) {
      out += prefix + ".identified=" + std::to_string(m->identified) + "\n";
      out += prefix + ".attempted=" + std::to_string(m->attempted) + "\n";
      out += prefix + ".correct=" + std::to_string(m->correct) + "\n";
      out += prefix + ".recall=" + Percent(m->recall) + "\n";
      out += prefix + ".precision=" + Percent(m->precision) + "\n";
    }
    out += "delta.recall=" + Signed(c.recall_delta) + "\n";
    out += "delta.precision=" + Signed(c.precision_delta) + "\n";
    return out;
  }
  std::string out;
  out += Row("", "Baseline", "System", "Delta");
  out += Row("Recall", Percent(c.baseline.recall) + "%",
             Percent(c.system.recall) + "%", Signed(c.recall_delta));
  out += Row("Precision", Percent(c.baseline.precision) + "%",
             Percent(c.system.precision) + "%", Signed(c.precision_delta));
  return out;
}

}  // namespace anafor
