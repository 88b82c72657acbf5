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

#ifndef RESTLINT_SPEC_MODEL_H_
#define RESTLINT_SPEC_MODEL_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "restlint/http_method.h"

namespace restlint {

enum class VersionKind { kSwagger2, kOpenApi3 };

std::string_view ToString(VersionKind kind);

// A non-fatal finding made while loading. `location` is a JSON pointer
// into the source document, or empty for document-level notes.
struct Diagnostic {
  std::string location;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ResponseRecord {
  std::string status_key;  // "200", "4XX" or "default"
  std::optional<std::string> description;
  std::set<std::string> media_types;

  friend bool operator==(const ResponseRecord&,
                         const ResponseRecord&) = default;
};

struct OperationRecord {
  HttpMethod method = HttpMethod::kGet;
  std::optional<std::string> operation_id;
  std::optional<std::string> summary;
  std::optional<std::string> description;
  bool has_request_body = false;
  std::set<std::string> request_media_types;
  std::map<std::string, ResponseRecord> responses;
  // Absent: inherit the document's global requirement. Present and empty:
  // explicitly unauthenticated.
  std::optional<std::vector<std::string>> security;
  std::vector<std::string> query_parameter_names;
  bool no_responses_declared = false;

  friend bool operator==(const OperationRecord&,
                         const OperationRecord&) = default;
};

struct PathEntry {
  std::string path_template;
  std::map<HttpMethod, OperationRecord> operations;
  std::vector<std::string> path_level_parameters;

  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

// Version-agnostic view of one OpenAPI or Swagger document. Immutable after
// loading. `paths` keeps source order.
struct ApiSpecification {
  std::string spec_id;
  std::string title;
  VersionKind version_kind = VersionKind::kOpenApi3;
  std::vector<PathEntry> paths;
  std::vector<std::string> global_security;
  std::set<std::string> security_schemes;
  std::vector<Diagnostic> diagnostics;

  const PathEntry* FindPath(std::string_view path_template) const;

  friend bool operator==(const ApiSpecification&,
                         const ApiSpecification&) = default;
};

// Position of a syntax error in the source, 1-based.
struct SourcePosition {
  int line = 0;
  int column = 0;
};

class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& message, std::optional<SourcePosition> pos)
      : std::runtime_error(message), position_(pos) {}

  const std::optional<SourcePosition>& position() const { return position_; }

 private:
  std::optional<SourcePosition> position_;
};

// The bytes are not valid JSON or YAML.
class ParseError : public LoadError {
 public:
  using LoadError::LoadError;
};

// Well-formed JSON/YAML that does not describe an API.
class NotAnApiSpec : public LoadError {
 public:
  using LoadError::LoadError;
};

// Parses JSON or YAML (by content, not by file name). Only same-document
// "$ref"s are followed; others are reported as diagnostics and treated as
// empty nodes. Throws ParseError or NotAnApiSpec.
ApiSpecification LoadSpec(std::string_view source, std::string spec_id);

// Reads the file and calls LoadSpec. Unreadable files raise ParseError.
ApiSpecification LoadSpecFile(const std::string& path, std::string spec_id);

// True when the operation requires credentials, taking the document-level
// requirement into account.
bool EffectiveSecurity(const ApiSpecification& spec, const OperationRecord& op);

// Debug dump of the normalized model and its inverse.
nlohmann::ordered_json DumpSpec(const ApiSpecification& spec);
ApiSpecification SpecFromDump(const nlohmann::ordered_json& dump);

}  // namespace restlint

#endif  // RESTLINT_SPEC_MODEL_H_
