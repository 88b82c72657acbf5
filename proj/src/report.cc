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

#include "restlint/report.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace restlint {
namespace {

using nlohmann::ordered_json;

std::string Dump(const ordered_json& j) {
  // Lossy for invalid UTF-8 in the input document, never throws.
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

std::string ReportText(const LintReport& report) {
  std::ostringstream out;
  const size_t n = report.violations.size();
  if (n == 0) {
    out << report.spec_id << ": no violations\n";
    return out.str();
  }
  out << report.spec_id << ": " << n << (n == 1 ? " violation" : " violations")
      << "\n";
  for (const Violation& v : report.violations) {
    out << "  " << v.path << " ";
    out << (v.method ? ToString(*v.method) : std::string_view("-"));
    out << " [" << ToString(v.rule) << "] " << v.fragment << ": " << v.message
        << "\n";
  }
  return out.str();
}

std::string ReportJson(const LintReport& report) {
  ordered_json j;
  j["spec_id"] = report.spec_id;
  j["violations"] = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["rule"] = ToString(v.rule);
    item["category"] = ToString(CategoryOf(v.rule));
    item["path"] = v.path;
    if (v.method) item["method"] = ToString(*v.method);
    if (v.status_key) item["status_key"] = *v.status_key;
    item["fragment"] = v.fragment;
    item["message"] = v.message;
    j["violations"].push_back(std::move(item));
  }
  ordered_json counts = ordered_json::object();
  for (RuleId rule : kAllRules) {
    counts[std::string(ToString(rule))] = report.counts[IndexOf(rule)];
  }
  j["counts"] = std::move(counts);
  return Dump(j) + "\n";
}

std::string SummaryText(const CorpusSummary& summary) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-18s %11s %10s %5s\n", "Rule Identifier",
                "Occurrences", "#Projects", "(%)");
  out << line;
  for (const SummaryRow& row : summary.rows) {
    std::snprintf(line, sizeof line, "%-18s %11llu %10llu %5llu\n",
                  std::string(ToString(row.rule)).c_str(),
                  static_cast<unsigned long long>(row.occurrences),
                  static_cast<unsigned long long>(row.projects_affected),
                  static_cast<unsigned long long>(row.percentage));
    out << line;
  }
  out << "Total projects: " << summary.total_projects << "\n";
  return out.str();
}

std::string SummaryJson(const CorpusSummary& summary) {
  ordered_json j;
  j["total_projects"] = summary.total_projects;
  j["rows"] = ordered_json::array();
  for (const SummaryRow& row : summary.rows) {
    j["rows"].push_back({{"rule", ToString(row.rule)},
                         {"category", ToString(CategoryOf(row.rule))},
                         {"occurrences", row.occurrences},
                         {"projects", row.projects_affected},
                         {"percentage", row.percentage}});
  }
  return Dump(j) + "\n";
}

std::string SummaryCsv(const CorpusSummary& summary) {
  std::ostringstream out;
  out << "rule,occurrences,projects,percentage\n";
  for (const SummaryRow& row : summary.rows) {
    out << ToString(row.rule) << ',' << row.occurrences << ','
        << row.projects_affected << ',' << row.percentage << '\n';
  }
  return out.str();
}

}  // namespace

std::string_view ToString(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return "text";
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
  }
  return "text";
}

bool ParseOutputFormat(std::string_view text, OutputFormat* out) {
  for (OutputFormat f :
       {OutputFormat::kText, OutputFormat::kJson, OutputFormat::kCsv}) {
    if (ToString(f) == text) {
      *out = f;
      return true;
    }
  }
  return false;
}

LintReport MakeReport(std::string spec_id, std::vector<Violation> violations) {
  LintReport report;
  report.spec_id = std::move(spec_id);
  SortAndCoalesce(violations);
  report.violations = std::move(violations);
  for (const Violation& v : report.violations) ++report.counts[IndexOf(v.rule)];
  return report;
}

uint64_t RoundedPercent(uint64_t part, uint64_t whole) {
  if (whole == 0) throw std::invalid_argument("percentage of zero total");
  return (200 * part + whole) / (2 * whole);
}

CorpusSummary Aggregate(const std::vector<LintReport>& reports,
                        uint64_t total_projects) {
  if (reports.empty()) throw EmptyCorpus();

  std::map<std::string, RuleCounts> per_project;
  for (const LintReport& report : reports) {
    RuleCounts& counts = per_project[report.spec_id];
    for (size_t i = 0; i < kRuleCount; ++i) counts[i] += report.counts[i];
  }
  if (total_projects < per_project.size()) {
    throw std::invalid_argument(
        "total_projects is smaller than the number of distinct projects");
  }

  CorpusSummary summary;
  summary.total_projects = total_projects;
  for (RuleId rule : kAllRules) {
    SummaryRow row;
    row.rule = rule;
    for (const auto& [id, counts] : per_project) {
      const uint64_t c = counts[IndexOf(rule)];
      row.occurrences += c;
      if (c > 0) ++row.projects_affected;
    }
    row.percentage = RoundedPercent(row.projects_affected, total_projects);
    summary.rows.push_back(row);
  }
  return summary;
}

std::string Render(const LintReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return ReportText(report);
    case OutputFormat::kJson:
      return ReportJson(report);
    case OutputFormat::kCsv:
      break;
  }
  throw UnsupportedFormat("csv output is only available for corpus summaries");
}

std::string Render(const CorpusSummary& summary, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return SummaryText(summary);
    case OutputFormat::kJson:
      return SummaryJson(summary);
    case OutputFormat::kCsv:
      return SummaryCsv(summary);
  }
  throw UnsupportedFormat("unknown output format");
}

}  // namespace restlint
