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

#include "restlint/config.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace restlint {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

const std::string& RequireString(const json& j, const std::string& field) {
  if (!j.is_string()) Fail(field, "expected a string");
  return j.get_ref<const std::string&>();
}

ArchetypeOverride ParseOverride(const json& j, const std::string& field) {
  if (!j.is_object()) Fail(field, "expected an object");
  ArchetypeOverride o;
  bool have_spec = false, have_path = false, have_index = false,
       have_archetype = false;
  for (const auto& [key, value] : j.items()) {
    const std::string sub = field + "." + key;
    if (key == "spec_id") {
      o.spec_id = RequireString(value, sub);
      have_spec = true;
    } else if (key == "path") {
      o.path = RequireString(value, sub);
      have_path = true;
    } else if (key == "segment_index") {
      if (!value.is_number_unsigned()) Fail(sub, "expected an index >= 0");
      o.segment_index = value.get<size_t>();
      have_index = true;
    } else if (key == "archetype") {
      const std::string& name = RequireString(value, sub);
      if (!ParseArchetype(name, &o.archetype) ||
          o.archetype == Archetype::kUnknown) {
        Fail(sub, "unknown archetype '" + name +
                      "' (expected collection, document, controller or "
                      "neutral)");
      }
      have_archetype = true;
    } else {
      Fail(sub, "unknown field");
    }
  }
  if (!have_spec) Fail(field + ".spec_id", "missing");
  if (!have_path) Fail(field + ".path", "missing");
  if (!have_index) Fail(field + ".segment_index", "missing");
  if (!have_archetype) Fail(field + ".archetype", "missing");
  return o;
}

}  // namespace

RuleConfig LintConfig::ToRuleConfig() const {
  RuleConfig cfg;
  cfg.enabled = {enabled_rules.begin(), enabled_rules.end()};
  cfg.archetype_overrides = archetype_overrides;
  cfg.exempt_parameter_names = exempt_parameter_names;
  return cfg;
}

LintConfig ParseConfig(std::string_view json_text,
                       const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");

  LintConfig cfg;
  for (const auto& [key, value] : root.items()) {
    if (key == "enabled_rules") {
      if (!value.is_array()) Fail(key, "expected a list of rule identifiers");
      cfg.enabled_rules.clear();
      for (size_t i = 0; i < value.size(); ++i) {
        const std::string field = key + "[" + std::to_string(i) + "]";
        const std::string& name = RequireString(value[i], field);
        const std::optional<RuleId> rule = ParseRuleId(name);
        if (!rule) Fail(field, "unknown rule '" + name + "'");
        cfg.enabled_rules.push_back(*rule);
      }
    } else if (key == "lexicon_path") {
      std::filesystem::path p(RequireString(value, key));
      cfg.lexicon_path =
          p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else if (key == "archetype_overrides") {
      if (!value.is_array()) Fail(key, "expected a list");
      for (size_t i = 0; i < value.size(); ++i) {
        cfg.archetype_overrides.push_back(
            ParseOverride(value[i], key + "[" + std::to_string(i) + "]"));
      }
    } else if (key == "exempt_parameter_names") {
      if (!value.is_boolean()) Fail(key, "expected true or false");
      cfg.exempt_parameter_names = value.get<bool>();
    } else if (key == "output_format") {
      const std::string& name = RequireString(value, key);
      OutputFormat f;
      if (!ParseOutputFormat(name, &f)) {
        Fail(key, "unknown format '" + name + "' (expected text, json or csv)");
      }
      cfg.output_format = f;
    } else {
      Fail(key, "unknown field");
    }
  }
  return cfg;
}

LintConfig LoadConfig(const std::optional<std::filesystem::path>& path) {
  if (!path) return LintConfig{};
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path->string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str(), path->parent_path());
}

}  // namespace restlint
