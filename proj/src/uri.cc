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

#include "restlint/uri.h"

#include <cctype>

namespace restlint {
namespace {

enum class CharClass { kLower, kUpper, kDigit, kHyphen, kUnderscore, kOther };

CharClass Classify(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x80) return CharClass::kLower;  // UTF-8 bytes stay inside words
  if (std::islower(u)) return CharClass::kLower;
  if (std::isupper(u)) return CharClass::kUpper;
  if (std::isdigit(u)) return CharClass::kDigit;
  if (c == '-') return CharClass::kHyphen;
  if (c == '_') return CharClass::kUnderscore;
  return CharClass::kOther;
}

bool IsLetter(CharClass c) {
  return c == CharClass::kLower || c == CharClass::kUpper;
}

bool HasLetter(std::string_view word) {
  for (char c : word) {
    if (IsLetter(Classify(c))) return true;
  }
  return false;
}

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::string_view ToString(Archetype archetype) {
  switch (archetype) {
    case Archetype::kUnknown:
      return "unknown";
    case Archetype::kCollection:
      return "collection";
    case Archetype::kDocument:
      return "document";
    case Archetype::kController:
      return "controller";
    case Archetype::kNeutral:
      return "neutral";
  }
  return "unknown";
}

bool ParseArchetype(std::string_view text, Archetype* out) {
  for (Archetype a :
       {Archetype::kUnknown, Archetype::kCollection, Archetype::kDocument,
        Archetype::kController, Archetype::kNeutral}) {
    if (ToString(a) == text) {
      *out = a;
      return true;
    }
  }
  return false;
}

WordSplit SplitWords(std::string_view text) {
  WordSplit split;
  std::string current;
  uint8_t pending = 0;  // separators seen since the last word ended
  CharClass prev = CharClass::kOther;

  const auto flush = [&] {
    if (!current.empty()) split.words.push_back(std::move(current));
    current.clear();
  };
  const auto start_word = [&](char c) {
    if (!split.words.empty()) split.boundaries |= pending;
    pending = 0;
    current.push_back(c);
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{') {
      const size_t close = text.find('}', i);
      if (close != std::string_view::npos) {
        flush();
        prev = CharClass::kOther;
        i = close;
        continue;
      }
    }
    const CharClass cls = Classify(c);
    switch (cls) {
      case CharClass::kHyphen:
        flush();
        pending |= kBoundaryHyphen;
        break;
      case CharClass::kUnderscore:
        flush();
        pending |= kBoundaryUnderscore;
        break;
      case CharClass::kOther:
        flush();
        pending |= kBoundaryOther;
        break;
      default: {
        const bool continues_word = !current.empty();
        if (continues_word && prev == CharClass::kLower &&
            cls == CharClass::kUpper) {
          flush();
          pending |= kBoundaryCase;
        } else if (continues_word &&
                   ((IsLetter(prev) && cls == CharClass::kDigit) ||
                    (prev == CharClass::kDigit && IsLetter(cls)))) {
          flush();
          pending |= kBoundaryDigit;
        }
        const char lower =
            static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (current.empty()) {
          start_word(lower);
        } else {
          current.push_back(lower);
        }
        break;
      }
    }
    prev = cls;
  }
  flush();
  return split;
}

std::string_view Segment::first_word() const {
  return words.empty() ? std::string_view() : std::string_view(words.front());
}

std::string_view Segment::head_word() const {
  return words.empty() ? std::string_view() : std::string_view(words.back());
}

std::string PathTemplate::Reconstruct() const {
  std::string out = missing_leading_slash ? "" : "/";
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '/';
    out += segments[i].raw;
  }
  if (has_trailing_slash) out += '/';
  return out;
}

PathTemplate TokenizePath(std::string_view raw) {
  PathTemplate path;
  path.raw = std::string(raw);
  std::string_view body = raw;
  if (body.empty() || body.front() != '/') {
    path.missing_leading_slash = true;
  } else {
    body.remove_prefix(1);
  }
  if (raw.size() > 1 && raw.back() == '/') {
    path.has_trailing_slash = true;
    body.remove_suffix(1);
  }
  if (body.empty() && !path.has_trailing_slash) return path;

  size_t start = 0;
  while (true) {
    const size_t slash = body.find('/', start);
    const std::string_view piece = body.substr(
        start, slash == std::string_view::npos ? std::string_view::npos
                                               : slash - start);
    Segment seg;
    seg.raw = std::string(piece);
    const bool braced = piece.size() >= 2 && piece.front() == '{' &&
                        piece.back() == '}' &&
                        piece.find_first_of("{}", 1) == piece.size() - 1;
    if (braced) {
      seg.kind = SegmentKind::kParameter;
      seg.name = std::string(piece.substr(1, piece.size() - 2));
    } else {
      seg.name = seg.raw;
    }
    WordSplit split = SplitWords(seg.name);
    seg.words = std::move(split.words);
    seg.boundaries = split.boundaries;
    if (piece.empty()) path.has_empty_segment = true;
    path.segments.push_back(std::move(seg));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return path;
}

void ClassifyArchetypes(PathTemplate& path, const WordLexicon& lexicon) {
  const size_t n = path.segments.size();
  for (size_t i = 0; i < n; ++i) {
    Segment& seg = path.segments[i];
    if (seg.is_parameter()) {
      seg.archetype = Archetype::kDocument;
      continue;
    }
    if (seg.words.empty() || !HasLetter(seg.head_word())) {
      seg.archetype = lexicon.IsNeutralSegment(Lowercase(seg.name))
                          ? Archetype::kNeutral
                          : Archetype::kUnknown;
      continue;
    }
    if (lexicon.IsNeutralSegment(Lowercase(seg.name))) {
      seg.archetype = Archetype::kNeutral;
    } else if (i + 1 < n && path.segments[i + 1].is_parameter()) {
      seg.archetype = Archetype::kCollection;
    } else if (i + 1 == n && lexicon.IsVerb(seg.first_word())) {
      seg.archetype = Archetype::kController;
    } else if (lexicon.IsPlural(seg.head_word())) {
      seg.archetype = Archetype::kCollection;
    } else {
      seg.archetype = Archetype::kDocument;
    }
  }
}

}  // namespace restlint
