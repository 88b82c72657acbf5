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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "json.hpp"
#include "test_util.h"

namespace restlint {
namespace {

Violation MakeViolation(RuleId rule, std::string spec_id, std::string path,
                        std::string fragment) {
  Violation v;
  v.rule = rule;
  v.spec_id = std::move(spec_id);
  v.path = std::move(path);
  v.fragment = std::move(fragment);
  v.message = "m";
  return v;
}

// Reports whose only content is `n` distinct violations of `rule`.
LintReport ReportWith(std::string id, RuleId rule, int n) {
  std::vector<Violation> vs;
  for (int i = 0; i < n; ++i) {
    vs.push_back(MakeViolation(rule, id, "/p" + std::to_string(i), "f"));
  }
  return MakeReport(id, std::move(vs));
}

const SummaryRow& RowOf(const CorpusSummary& s, RuleId rule) {
  return s.rows.at(IndexOf(rule));
}

// Independent oracle: nearest integer, halves away from zero, via
// quotient and remainder.
uint64_t OraclePercent(uint64_t part, uint64_t whole) {
  const uint64_t q = (100 * part) / whole;
  const uint64_t r = (100 * part) % whole;
  return 2 * r >= whole ? q + 1 : q;
}

TEST(RoundedPercentTest, MatchesOracle) {
  for (uint64_t whole = 1; whole <= 200; ++whole) {
    for (uint64_t part = 0; part <= whole; ++part) {
      ASSERT_EQ(RoundedPercent(part, whole), OraclePercent(part, whole))
          << part << "/" << whole;
    }
  }
}

TEST(RoundedPercentTest, HalvesRoundUp) {
  EXPECT_EQ(RoundedPercent(1, 40), 3u);   // 2.5
  EXPECT_EQ(RoundedPercent(3, 40), 8u);   // 7.5
  EXPECT_EQ(RoundedPercent(5, 40), 13u);  // 12.5
  EXPECT_EQ(RoundedPercent(1, 3), 33u);
  EXPECT_EQ(RoundedPercent(2, 3), 67u);
  EXPECT_THROW(RoundedPercent(0, 0), std::invalid_argument);
}

TEST(AggregateTest, HyphensAndPluralNounExamples) {
  std::vector<LintReport> reports;
  for (int p = 0; p < 40; ++p) {
    const std::string id = "p" + std::to_string(p);
    std::vector<Violation> vs;
    const int hyphens = p < 39 ? (p < 14 ? 5 : 4) : 0;  // 14*5 + 25*4 = 170
    const int plural = p < 35 ? (p < 4 ? 6 : 5) : 0;    // 4*6 + 31*5 = 179
    for (int i = 0; i < hyphens; ++i) {
      vs.push_back(
          MakeViolation(RuleId::kHyphens, id, "/h" + std::to_string(i), "x"));
    }
    for (int i = 0; i < plural; ++i) {
      vs.push_back(MakeViolation(RuleId::kPluralNoun, id,
                                 "/n" + std::to_string(i), "x"));
    }
    reports.push_back(MakeReport(id, std::move(vs)));
  }
  const CorpusSummary s = Aggregate(reports, 40);
  EXPECT_EQ(RowOf(s, RuleId::kHyphens),
            (SummaryRow{RuleId::kHyphens, 170, 39, 98}));
  EXPECT_EQ(RowOf(s, RuleId::kPluralNoun),
            (SummaryRow{RuleId::kPluralNoun, 179, 35, 88}));
}

TEST(AggregateTest, CleanProjectOnly) {
  const CorpusSummary s = Aggregate({MakeReport("clean", {})}, 1);
  ASSERT_EQ(s.rows.size(), kRuleCount);
  for (size_t i = 0; i < kRuleCount; ++i) {
    EXPECT_EQ(s.rows[i], (SummaryRow{kAllRules[i], 0, 0, 0}));
  }
  EXPECT_EQ(s.total_projects, 1u);
}

TEST(AggregateTest, EmptyCorpusThrows) {
  EXPECT_THROW(Aggregate({}, 0), EmptyCorpus);
  EXPECT_THROW(Aggregate({}, 5), EmptyCorpus);
}

TEST(AggregateTest, TotalBelowDistinctProjectsThrows) {
  EXPECT_THROW(Aggregate({MakeReport("a", {}), MakeReport("b", {})}, 1),
               std::invalid_argument);
}

TEST(AggregateTest, ReportsSharingAnIdAreOneProject) {
  const CorpusSummary s = Aggregate({ReportWith("a", RuleId::kLowercase, 2),
                                     ReportWith("a", RuleId::kLowercase, 3),
                                     ReportWith("b", RuleId::kLowercase, 0)},
                                    2);
  EXPECT_EQ(RowOf(s, RuleId::kLowercase),
            (SummaryRow{RuleId::kLowercase, 5, 1, 50}));
}

TEST(AggregateTest, ReproducesGoldenTableFromSyntheticCorpus) {
  const auto rows = testing::LoadGoldenTable(testing::TestDataDir() / "golden" /
                                             "corpus_summary.csv");
  ASSERT_EQ(rows.size(), kRuleCount);
  const CorpusSummary s = Aggregate(testing::SyntheticCorpus(rows, 40), 40);
  for (const testing::GoldenRow& row : rows) {
    EXPECT_EQ(RowOf(s, row.rule), (SummaryRow{row.rule, row.occurrences,
                                              row.projects, row.percentage}))
        << ToString(row.rule);
  }
  EXPECT_EQ(Render(s, OutputFormat::kCsv),
            testing::ReadFile(testing::TestDataDir() / "golden" /
                              "corpus_summary.csv"));
}

TEST(AggregateTest, InvariantsHoldOnRandomCorpora) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int projects = 1 + static_cast<int>(rng() % 30);
    std::vector<LintReport> reports;
    std::map<RuleId, uint64_t> occ;
    std::map<RuleId, std::set<std::string>> affected;
    for (int p = 0; p < projects; ++p) {
      const std::string id = "p" + std::to_string(p);
      std::vector<Violation> vs;
      const int n = static_cast<int>(rng() % 12);
      for (int i = 0; i < n; ++i) {
        const RuleId rule = kAllRules[rng() % kRuleCount];
        vs.push_back(MakeViolation(rule, id, "/x" + std::to_string(i), "f"));
        ++occ[rule];
        affected[rule].insert(id);
      }
      reports.push_back(MakeReport(id, std::move(vs)));
    }
    const uint64_t total = projects + rng() % 5;
    const CorpusSummary s = Aggregate(reports, total);

    for (RuleId rule : kAllRules) {
      const SummaryRow& row = RowOf(s, rule);
      EXPECT_EQ(row.occurrences, occ[rule]);
      EXPECT_EQ(row.projects_affected, affected[rule].size());
      EXPECT_LE(row.projects_affected, total);
      EXPECT_LE(row.projects_affected, row.occurrences);
      EXPECT_LE(row.percentage, 100u);
      EXPECT_EQ(row.percentage, OraclePercent(row.projects_affected, total));
    }

    std::shuffle(reports.begin(), reports.end(), rng);
    EXPECT_EQ(Aggregate(reports, total), s);
  }
}

TEST(MakeReportTest, CountsMatchViolations) {
  const LintReport r =
      MakeReport("s", {MakeViolation(RuleId::kHyphens, "s", "/a", "x"),
                       MakeViolation(RuleId::kHyphens, "s", "/a", "x"),
                       MakeViolation(RuleId::kLowercase, "s", "/a", "x")});
  EXPECT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.counts[IndexOf(RuleId::kHyphens)], 1u);
  EXPECT_EQ(r.counts[IndexOf(RuleId::kLowercase)], 1u);
}

TEST(RenderTest, EmptyReportJson) {
  EXPECT_EQ(Render(MakeReport("api.yaml", {}), OutputFormat::kJson),
            "{\"spec_id\":\"api.yaml\",\"violations\":[],\"counts\":{"
            "\"RC401\":0,\"PluralNoun\":0,\"SingularNoun\":0,"
            "\"NoTrailingSlash\":0,\"VerbController\":0,\"NoCRUDNames\":0,"
            "\"ContentType\":0,\"DescriptionType\":0,\"ForwardSlash\":0,"
            "\"NoTunnel\":0,\"GETRetrieve\":0,\"Hyphens\":0,\"Lowercase\":0,"
            "\"NoUnderscores\":0}}\n");
}

TEST(RenderTest, EmptyReportText) {
  EXPECT_EQ(Render(MakeReport("api.yaml", {}), OutputFormat::kText),
            "api.yaml: no violations\n");
}

TEST(RenderTest, SingleViolationTextMatchesGolden) {
  Violation v =
      MakeViolation(RuleId::kLowercase, "api.yaml", "/Users", "Users");
  v.message = "segment 'Users' contains uppercase letters";
  EXPECT_EQ(Render(MakeReport("api.yaml", {v}), OutputFormat::kText),
            testing::ReadFile(testing::TestDataDir() / "golden" /
                              "one_violation.txt"));
}

TEST(RenderTest, CsvHeaderAndLineEndings) {
  const std::string csv =
      Render(Aggregate({MakeReport("a", {})}, 1), OutputFormat::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n') + 1),
            "rule,occurrences,projects,percentage\n");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 15);
}

TEST(RenderTest, CsvForReportIsUnsupported) {
  EXPECT_THROW(Render(MakeReport("a", {}), OutputFormat::kCsv),
               UnsupportedFormat);
}

TEST(RenderTest, SummaryText) {
  const std::string text =
      Render(Aggregate({ReportWith("a", RuleId::kHyphens, 3)}, 2),
             OutputFormat::kText);
  EXPECT_NE(text.find("Hyphens                      3          1    50\n"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("Total projects: 2\n"), std::string::npos);
}

TEST(RenderTest, JsonReportRoundTripsViolations) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Violation> vs;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      Violation v = MakeViolation(kAllRules[rng() % kRuleCount], "s",
                                  "/a\"\\" + std::to_string(rng() % 3),
                                  "f" + std::to_string(rng() % 3));
      if (rng() % 2) v.method = kAllHttpMethods[rng() % kAllHttpMethods.size()];
      if (v.method && rng() % 2) v.status_key = "200";
      vs.push_back(v);
    }
    const LintReport report = MakeReport("s", vs);
    const auto j =
        nlohmann::ordered_json::parse(Render(report, OutputFormat::kJson));
    ASSERT_EQ(j.at("violations").size(), report.violations.size());
    for (size_t i = 0; i < report.violations.size(); ++i) {
      const Violation& v = report.violations[i];
      const auto& item = j.at("violations")[i];
      EXPECT_EQ(item.at("rule"), ToString(v.rule));
      EXPECT_EQ(item.at("category"), ToString(CategoryOf(v.rule)));
      EXPECT_EQ(item.at("path"), v.path);
      EXPECT_EQ(item.at("fragment"), v.fragment);
      EXPECT_EQ(item.contains("method"), v.method.has_value());
      EXPECT_EQ(item.contains("status_key"), v.status_key.has_value());
    }
    for (RuleId rule : kAllRules) {
      EXPECT_EQ(j.at("counts").at(std::string(ToString(rule))),
                report.counts[IndexOf(rule)]);
    }
  }
}

TEST(RenderTest, DistinctReportsRenderDistinctly) {
  std::set<std::string> seen;
  std::vector<LintReport> reports = {MakeReport("a", {}), MakeReport("b", {})};
  for (RuleId rule : kAllRules) {
    reports.push_back(ReportWith("a", rule, 1));
    reports.push_back(ReportWith("a", rule, 2));
  }
  for (const LintReport& r : reports) {
    EXPECT_TRUE(seen.insert(Render(r, OutputFormat::kJson)).second);
  }
}

TEST(RenderTest, InvalidUtf8DoesNotThrow) {
  const LintReport r = MakeReport(
      "s", {MakeViolation(RuleId::kLowercase, "s", "/\xff", "\xff")});
  EXPECT_NO_THROW(Render(r, OutputFormat::kJson));
}

TEST(OutputFormatTest, ParseAndPrint) {
  for (OutputFormat f :
       {OutputFormat::kText, OutputFormat::kJson, OutputFormat::kCsv}) {
    OutputFormat parsed;
    ASSERT_TRUE(ParseOutputFormat(ToString(f), &parsed));
    EXPECT_EQ(parsed, f);
  }
  OutputFormat ignored;
  EXPECT_FALSE(ParseOutputFormat("xml", &ignored));
}

}  // namespace
}  // namespace restlint
