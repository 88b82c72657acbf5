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

#ifndef RESTLINT_CONFIG_H_
#define RESTLINT_CONFIG_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "restlint/report.h"
#include "restlint/rules.h"

namespace restlint {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lint configuration file (JSON):
//
//   {
//     "enabled_rules": ["Hyphens", "Lowercase"],
//     "lexicon_path": "team-words.txt",
//     "archetype_overrides": [
//       {"spec_id": "api.yaml", "path": "/users/{id}/activation",
//        "segment_index": 2, "archetype": "controller"}
//     ],
//     "exempt_parameter_names": true,
//     "output_format": "json"
//   }
//
// Every field is optional. Unknown fields are an error. A relative
// lexicon_path is resolved against the directory holding the config file.
struct LintConfig {
  std::vector<RuleId> enabled_rules{kAllRules.begin(), kAllRules.end()};
  std::optional<std::filesystem::path> lexicon_path;
  std::vector<ArchetypeOverride> archetype_overrides;
  bool exempt_parameter_names = true;
  std::optional<OutputFormat> output_format;

  RuleConfig ToRuleConfig() const;

  friend bool operator==(const LintConfig&, const LintConfig&) = default;
};

// `base_dir` anchors a relative lexicon_path.
LintConfig ParseConfig(std::string_view json_text,
                       const std::filesystem::path& base_dir = {});

// No path: defaults. Throws ConfigError with a field-level message.
LintConfig LoadConfig(const std::optional<std::filesystem::path>& path);

}  // namespace restlint

#endif  // RESTLINT_CONFIG_H_
