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

#ifndef RESTLINT_LEXICON_H_
#define RESTLINT_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "restlint/http_method.h"

namespace restlint {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::string source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// English word oracles used to classify URI segments. Immutable once
// built; entries are lowercase.
//
// Text format (UTF-8): '#' starts a comment, blank lines are ignored and
// section headers select what the following lines mean:
//
//   [irregular]   plural singular
//   [invariant]   word
//   [verb]        word
//   [crud]        token METHOD
//   [neutral]     word
class WordLexicon {
 public:
  // The lexicon bundled with the library (data/lexicon.txt).
  static const WordLexicon& Default();

  // `source` names the input in error messages.
  static WordLexicon Parse(std::string_view text,
                           std::string_view source = "<lexicon>");
  static WordLexicon LoadFile(const std::filesystem::path& path);

  // Plurality is binary: is_singular(w) == !is_plural(w).
  bool IsPlural(std::string_view word) const;
  bool IsSingular(std::string_view word) const { return !IsPlural(word); }

  // True for verb-set members and for CRUD tokens.
  bool IsVerb(std::string_view word) const;
  std::optional<HttpMethod> CrudMethodOf(std::string_view word) const;

  bool IsInvariant(std::string_view word) const;

  // Matches neutral entries and the version pattern v<digits>.
  bool IsNeutralSegment(std::string_view text) const;

  const std::map<std::string, std::string, std::less<>>&
  irregular_plural_to_singular() const {
    return irregular_;
  }
  const std::set<std::string, std::less<>>& invariant_forms() const {
    return invariant_;
  }
  const std::set<std::string, std::less<>>& verbs() const { return verbs_; }
  const std::map<std::string, HttpMethod, std::less<>>& crud_tokens() const {
    return crud_;
  }
  const std::set<std::string, std::less<>>& neutral_segments() const {
    return neutral_;
  }

  friend bool operator==(const WordLexicon&, const WordLexicon&) = default;

 private:
  std::map<std::string, std::string, std::less<>> irregular_;
  std::set<std::string, std::less<>> irregular_singulars_;
  std::set<std::string, std::less<>> invariant_;
  std::set<std::string, std::less<>> verbs_;
  std::map<std::string, HttpMethod, std::less<>> crud_;
  std::set<std::string, std::less<>> neutral_;
};

}  // namespace restlint

#endif  // RESTLINT_LEXICON_H_
