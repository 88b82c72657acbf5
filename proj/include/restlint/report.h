// Copyright 2026 The restlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESTLINT_REPORT_H_
#define RESTLINT_REPORT_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "restlint/rules.h"

namespace restlint {

enum class OutputFormat { kText, kJson, kCsv };

std::string_view ToString(OutputFormat format);
bool ParseOutputFormat(std::string_view text, OutputFormat* out);

class EmptyCorpus : public std::runtime_error {
 public:
  EmptyCorpus() : std::runtime_error("corpus contains no projects") {}
};

class UnsupportedFormat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RuleCounts = std::array<uint64_t, kRuleCount>;

struct LintReport {
  std::string spec_id;
  std::vector<Violation> violations;  // sorted, coalesced
  RuleCounts counts{};                // indexed by IndexOf(RuleId)

  friend bool operator==(const LintReport&, const LintReport&) = default;
};

// Sorts, coalesces and counts.
LintReport MakeReport(std::string spec_id, std::vector<Violation> violations);

struct SummaryRow {
  RuleId rule = RuleId::kRc401;
  uint64_t occurrences = 0;
  uint64_t projects_affected = 0;
  uint64_t percentage = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct CorpusSummary {
  uint64_t total_projects = 0;
  std::vector<SummaryRow> rows;  // one per rule, in rule order

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

// round-half-up(100 * part / whole) in exact integer arithmetic.
uint64_t RoundedPercent(uint64_t part, uint64_t whole);

// Reports sharing a spec_id count as one project. Throws EmptyCorpus for an
// empty list and std::invalid_argument when total_projects is smaller than
// the number of distinct spec ids.
CorpusSummary Aggregate(const std::vector<LintReport>& reports,
                        uint64_t total_projects);

// Deterministic renderings. CSV is only defined for corpus summaries;
// asking for it with a report throws UnsupportedFormat.
std::string Render(const LintReport& report, OutputFormat format);
std::string Render(const CorpusSummary& summary, OutputFormat format);

}  // namespace restlint

#endif  // RESTLINT_REPORT_H_
