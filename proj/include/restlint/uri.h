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

#ifndef RESTLINT_URI_H_
#define RESTLINT_URI_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "restlint/lexicon.h"

namespace restlint {

enum class SegmentKind { kLiteral, kParameter };

enum class Archetype {
  kUnknown,
  kCollection,
  kDocument,
  kController,
  kNeutral
};

std::string_view ToString(Archetype archetype);
// Accepts the lowercase names "collection", "document", ... Returns false
// on anything else.
bool ParseArchetype(std::string_view text, Archetype* out);

// Word-boundary kinds observed while splitting a segment.
enum BoundaryKind : uint8_t {
  kBoundaryHyphen = 1 << 0,
  kBoundaryUnderscore = 1 << 1,
  kBoundaryCase = 1 << 2,   // lowercase letter followed by uppercase
  kBoundaryDigit = 1 << 3,  // letter <-> digit
  kBoundaryOther = 1 << 4,  // any other separator character
};

struct WordSplit {
  std::vector<std::string> words;  // lowercase, in order
  uint8_t boundaries = 0;          // BoundaryKind bits

  bool Has(BoundaryKind kind) const { return (boundaries & kind) != 0; }
  friend bool operator==(const WordSplit&, const WordSplit&) = default;
};

// Splits at hyphens, underscores, lower->upper transitions and letter/digit
// transitions. Other non-alphanumeric characters also separate words and
// are reported as kBoundaryOther. Brace-delimited template expressions
// ("{id}") are skipped without recording a boundary.
WordSplit SplitWords(std::string_view text);

struct Segment {
  SegmentKind kind = SegmentKind::kLiteral;
  std::string raw;   // parameter segments keep their braces
  std::string name;  // parameter name without braces, or the literal text
  std::vector<std::string> words;
  uint8_t boundaries = 0;
  Archetype archetype = Archetype::kUnknown;

  bool is_parameter() const { return kind == SegmentKind::kParameter; }
  // First and last word tokens; empty for segments without words.
  std::string_view first_word() const;
  std::string_view head_word() const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PathTemplate {
  std::string raw;
  std::vector<Segment> segments;
  bool has_trailing_slash = false;
  bool has_empty_segment = false;  // a "//" somewhere in the template
  bool missing_leading_slash = false;

  // Inverse of TokenizePath.
  std::string Reconstruct() const;

  friend bool operator==(const PathTemplate&, const PathTemplate&) = default;
};

// Total: every input yields a template, with flags describing oddities.
PathTemplate TokenizePath(std::string_view raw);

// Assigns an archetype to each segment. Idempotent and deterministic for a
// fixed lexicon:
//   1. parameter segments are documents;
//   2. a literal followed by a parameter is a collection;
//   3. the final segment, when literal and starting with a verb, is a
//      controller;
//   4. otherwise neutral segments (api, v1, ...) are neutral, and the head
//      word decides between collection (plural) and document (singular);
//   5. everything else, including segments without letters, is unknown.
void ClassifyArchetypes(PathTemplate& path, const WordLexicon& lexicon);

}  // namespace restlint

#endif  // RESTLINT_URI_H_
