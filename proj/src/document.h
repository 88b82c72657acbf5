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

#ifndef RESTLINT_SRC_DOCUMENT_H_
#define RESTLINT_SRC_DOCUMENT_H_

// Internal: turns JSON or YAML bytes into a JSON tree.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "restlint/spec_model.h"

namespace restlint::internal {

inline constexpr int kMaxNestingDepth = 256;
inline constexpr size_t kMaxNodes = 4'000'000;

struct Document {
  nlohmann::ordered_json root;
  // Duplicate mapping keys (first occurrence kept) and similar notes.
  std::vector<Diagnostic> diagnostics;
};

// Content starting with '{' or '[' is tried as JSON first; everything else
// (and JSON that fails to parse) goes through the YAML parser. Throws
// ParseError.
Document ParseDocument(std::string_view source);

// RFC 6901 escaping of a single reference token.
std::string EscapePointerToken(std::string_view token);

}  // namespace restlint::internal

#endif  // RESTLINT_SRC_DOCUMENT_H_
