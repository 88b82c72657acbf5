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

#include "restlint/lexicon.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace restlint {

// Generated from data/lexicon.txt at build time.
extern const char kDefaultLexiconText[];

namespace {

enum class Section { kNone, kIrregular, kInvariant, kVerb, kCrud, kNeutral };

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> Fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

bool IsLowercaseWord(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::islower(u) || std::isdigit(u) || c == '-')) return false;
  }
  return true;
}

}  // namespace

LexiconError::LexiconError(std::string source, int line,
                           const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

const WordLexicon& WordLexicon::Default() {
  static const WordLexicon kDefault =
      Parse(kDefaultLexiconText, "<built-in lexicon>");
  return kDefault;
}

WordLexicon WordLexicon::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError(path.string(), 0, "cannot open lexicon file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.string());
}

WordLexicon WordLexicon::Parse(std::string_view text, std::string_view source) {
  WordLexicon lex;
  const std::string src(source);
  Section section = Section::kNone;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") {
      line.remove_prefix(3);
    }
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line == "[irregular]") {
        section = Section::kIrregular;
      } else if (line == "[invariant]") {
        section = Section::kInvariant;
      } else if (line == "[verb]") {
        section = Section::kVerb;
      } else if (line == "[crud]") {
        section = Section::kCrud;
      } else if (line == "[neutral]") {
        section = Section::kNeutral;
      } else {
        throw LexiconError(src, line_no,
                           "unknown section " + std::string(line));
      }
      continue;
    }

    const std::vector<std::string> f = Fields(line);
    const auto want_fields = [&](size_t n) {
      if (f.size() != n) {
        throw LexiconError(src, line_no,
                           "expected " + std::to_string(n) + " field(s), got " +
                               std::to_string(f.size()));
      }
    };
    const auto want_word = [&](const std::string& w) {
      if (!IsLowercaseWord(w)) {
        throw LexiconError(src, line_no,
                           "entry '" + w + "' is not a lowercase word");
      }
    };

    switch (section) {
      case Section::kNone:
        throw LexiconError(src, line_no, "entry before any section header");
      case Section::kIrregular: {
        want_fields(2);
        want_word(f[0]);
        want_word(f[1]);
        auto [it, inserted] = lex.irregular_.emplace(f[0], f[1]);
        if (!inserted && it->second != f[1]) {
          throw LexiconError(src, line_no,
                             "conflicting singular for '" + f[0] + "'");
        }
        lex.irregular_singulars_.insert(f[1]);
        break;
      }
      case Section::kInvariant:
        want_fields(1);
        want_word(f[0]);
        lex.invariant_.insert(f[0]);
        break;
      case Section::kVerb:
        want_fields(1);
        want_word(f[0]);
        lex.verbs_.insert(f[0]);
        break;
      case Section::kCrud: {
        want_fields(2);
        want_word(f[0]);
        const std::optional<HttpMethod> method = ParseHttpMethod(f[1]);
        if (!method || f[1] != ToString(*method)) {
          throw LexiconError(src, line_no,
                             "'" + f[1] + "' is not an upper-case HTTP method");
        }
        auto [it, inserted] = lex.crud_.emplace(f[0], *method);
        if (!inserted && it->second != *method) {
          throw LexiconError(src, line_no,
                             "conflicting method for '" + f[0] + "'");
        }
        break;
      }
      case Section::kNeutral:
        want_fields(1);
        want_word(f[0]);
        lex.neutral_.insert(f[0]);
        break;
    }
  }

  for (const auto& [plural, singular] : lex.irregular_) {
    if (lex.invariant_.contains(plural) || lex.invariant_.contains(singular)) {
      throw LexiconError(src, 0,
                         "irregular pair '" + plural + " " + singular +
                             "' overlaps the invariant section");
    }
    if (lex.irregular_singulars_.contains(plural)) {
      throw LexiconError(src, 0,
                         "'" + plural +
                             "' is listed as both plural and "
                             "singular");
    }
  }
  return lex;
}

bool WordLexicon::IsPlural(std::string_view word) const {
  if (irregular_.contains(word)) return true;
  if (invariant_.contains(word) || irregular_singulars_.contains(word)) {
    return false;
  }
  if (!word.ends_with('s')) return false;
  return !(word.ends_with("ss") || word.ends_with("us") ||
           word.ends_with("is"));
}

bool WordLexicon::IsVerb(std::string_view word) const {
  return verbs_.contains(word) || crud_.contains(word);
}

std::optional<HttpMethod> WordLexicon::CrudMethodOf(
    std::string_view word) const {
  if (auto it = crud_.find(word); it != crud_.end()) return it->second;
  return std::nullopt;
}

bool WordLexicon::IsInvariant(std::string_view word) const {
  return invariant_.contains(word);
}

bool WordLexicon::IsNeutralSegment(std::string_view text) const {
  if (neutral_.contains(text)) return true;
  if (text.size() < 2 || text.front() != 'v') return false;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace restlint
