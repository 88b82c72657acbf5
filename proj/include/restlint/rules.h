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

#ifndef RESTLINT_RULES_H_
#define RESTLINT_RULES_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "restlint/http_method.h"
#include "restlint/lexicon.h"
#include "restlint/spec_model.h"
#include "restlint/uri.h"

namespace restlint {

// The fourteen design rules. Declaration order is the canonical report
// order.
enum class RuleId {
  kRc401,
  kPluralNoun,
  kSingularNoun,
  kNoTrailingSlash,
  kVerbController,
  kNoCrudNames,
  kContentType,
  kDescriptionType,
  kForwardSlash,
  kNoTunnel,
  kGetRetrieve,
  kHyphens,
  kLowercase,
  kNoUnderscores,
};

inline constexpr size_t kRuleCount = 14;

inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::kRc401,           RuleId::kPluralNoun,      RuleId::kSingularNoun,
    RuleId::kNoTrailingSlash, RuleId::kVerbController,  RuleId::kNoCrudNames,
    RuleId::kContentType,     RuleId::kDescriptionType, RuleId::kForwardSlash,
    RuleId::kNoTunnel,        RuleId::kGetRetrieve,     RuleId::kHyphens,
    RuleId::kLowercase,       RuleId::kNoUnderscores};

enum class RuleCategory {
  kHttpStatusCodes,
  kUriDesign,
  kMetadataDesign,
  kRequestMethods,
};

// Identifier as printed in reports, e.g. "NoCRUDNames".
std::string_view ToString(RuleId rule);
// Exact, case-sensitive match of the printed identifier.
std::optional<RuleId> ParseRuleId(std::string_view text);
RuleCategory CategoryOf(RuleId rule);
// "HTTPStatusCodes", "URIDesign", "MetadataDesign" or "RequestMethods".
std::string_view ToString(RuleCategory category);
inline size_t IndexOf(RuleId rule) { return static_cast<size_t>(rule); }

struct Violation {
  RuleId rule = RuleId::kRc401;
  std::string spec_id;
  std::string path;
  std::optional<HttpMethod> method;
  std::optional<std::string> status_key;
  std::string fragment;
  std::string message;

  // Identity within a report; `message` is derived and not compared.
  bool SameLocation(const Violation& other) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Report order: path, method (path-level findings first), rule, fragment,
// status key.
bool ViolationLess(const Violation& a, const Violation& b);

// Sorts and drops exact duplicates (same rule and location).
void SortAndCoalesce(std::vector<Violation>& violations);

// Pins the archetype of one literal segment of one path. Overrides that
// target parameter segments or out-of-range indices have no effect.
struct ArchetypeOverride {
  std::string spec_id;
  std::string path;
  size_t segment_index = 0;
  Archetype archetype = Archetype::kUnknown;

  friend bool operator==(const ArchetypeOverride&,
                         const ArchetypeOverride&) = default;
};

struct RuleConfig {
  std::set<RuleId> enabled{kAllRules.begin(), kAllRules.end()};
  std::vector<ArchetypeOverride> archetype_overrides;
  // When set, Lowercase and NoUnderscores ignore path parameter names.
  bool exempt_parameter_names = true;
};

struct AnalyzedPath {
  const PathEntry* entry;
  PathTemplate tmpl;  // tokenized, classified, overrides applied
};

// Everything a checker reads. Tokenizes and classifies every path once.
class LintContext {
 public:
  LintContext(const ApiSpecification& spec, const WordLexicon& lexicon,
              const RuleConfig& config);

  const ApiSpecification& spec() const { return spec_; }
  const WordLexicon& lexicon() const { return lexicon_; }
  const RuleConfig& config() const { return config_; }
  const std::vector<AnalyzedPath>& paths() const { return paths_; }

 private:
  const ApiSpecification& spec_;
  const WordLexicon& lexicon_;
  const RuleConfig& config_;
  std::vector<AnalyzedPath> paths_;
};

using Checker = std::vector<Violation> (*)(const LintContext&);

std::vector<Violation> CheckRc401(const LintContext& ctx);
std::vector<Violation> CheckPluralNoun(const LintContext& ctx);
std::vector<Violation> CheckSingularNoun(const LintContext& ctx);
std::vector<Violation> CheckNoTrailingSlash(const LintContext& ctx);
std::vector<Violation> CheckVerbController(const LintContext& ctx);
std::vector<Violation> CheckNoCrudNames(const LintContext& ctx);
std::vector<Violation> CheckContentType(const LintContext& ctx);
std::vector<Violation> CheckDescriptionType(const LintContext& ctx);
std::vector<Violation> CheckForwardSlash(const LintContext& ctx);
std::vector<Violation> CheckNoTunnel(const LintContext& ctx);
std::vector<Violation> CheckGetRetrieve(const LintContext& ctx);
std::vector<Violation> CheckHyphens(const LintContext& ctx);
std::vector<Violation> CheckLowercase(const LintContext& ctx);
std::vector<Violation> CheckNoUnderscores(const LintContext& ctx);

Checker CheckerFor(RuleId rule);

// Runs every enabled checker and returns the sorted, coalesced union.
std::vector<Violation> RunRules(const ApiSpecification& spec,
                                const RuleConfig& config,
                                const WordLexicon& lexicon);

}  // namespace restlint

#endif  // RESTLINT_RULES_H_
