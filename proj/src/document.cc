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

#include "document.h"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <memory>

namespace restlint::internal {
namespace {

using nlohmann::ordered_json;

std::string JoinPointer(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    out += '/';
    out += EscapePointerToken(t);
  }
  return out;
}

SourcePosition PositionOfByte(std::string_view source, size_t byte) {
  SourcePosition pos{1, 1};
  const size_t limit = std::min(byte, source.size());
  for (size_t i = 0; i < limit; ++i) {
    if (source[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Builds an ordered_json tree while keeping the first of any duplicated
// object keys. nlohmann's own DOM parser would silently keep the last.
class FirstWinsSax : public nlohmann::json_sax<ordered_json> {
 public:
  FirstWinsSax(ordered_json& root, std::vector<Diagnostic>& diagnostics)
      : root_(root), diagnostics_(diagnostics) {}

  bool null() override { return Put(nullptr); }
  bool boolean(bool v) override { return Put(v); }
  bool number_integer(number_integer_t v) override { return Put(v); }
  bool number_unsigned(number_unsigned_t v) override { return Put(v); }
  bool number_float(number_float_t v, const string_t&) override {
    return Put(v);
  }
  bool string(string_t& v) override { return Put(v); }
  bool binary(binary_t&) override { return Put(nullptr); }

  bool start_object(std::size_t) override {
    return Open(ordered_json::object());
  }
  bool end_object() override { return Close(); }
  bool start_array(std::size_t) override { return Open(ordered_json::array()); }
  bool end_array() override { return Close(); }

  bool key(string_t& k) override {
    Frame& top = stack_.back();
    top.key = k;
    top.discard_next = top.node != nullptr && top.node->contains(k);
    if (top.discard_next) {
      std::vector<std::string> where = Tokens();
      diagnostics_.push_back(
          {JoinPointer(where),
           "duplicate key '" + k + "'; keeping the first occurrence"});
    }
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  bool too_deep() const { return too_deep_; }
  size_t error_position() const { return error_position_; }
  const std::string& error_message() const { return error_message_; }

 private:
  struct Frame {
    ordered_json* node;  // null while skipping a duplicate's value
    std::string key;
    bool discard_next = false;
  };

  std::vector<std::string> Tokens() const {
    std::vector<std::string> out;
    for (const Frame& f : stack_) {
      if (f.node == nullptr) break;
      if (f.node->is_object()) {
        out.push_back(f.key);
      } else {
        // The element being filled is the last one pushed.
        out.push_back(std::to_string(f.node->empty() ? 0 : f.node->size() - 1));
      }
    }
    return out;
  }

  // Returns where the next value goes, or null if it is to be dropped.
  ordered_json* Slot(ordered_json&& value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Frame& top = stack_.back();
    if (top.node == nullptr) return nullptr;
    if (top.node->is_array()) {
      top.node->push_back(std::move(value));
      return &top.node->back();
    }
    if (top.discard_next) {
      top.discard_next = false;
      return nullptr;
    }
    auto& slot = (*top.node)[top.key];
    slot = std::move(value);
    return &slot;
  }

  bool Put(ordered_json value) {
    Slot(std::move(value));
    return true;
  }

  bool Open(ordered_json&& container) {
    if (stack_.size() >= static_cast<size_t>(kMaxNestingDepth)) {
      too_deep_ = true;
      return false;
    }
    ordered_json* slot = Slot(std::move(container));
    stack_.push_back({slot, {}, false});
    return true;
  }

  bool Close() {
    stack_.pop_back();
    return true;
  }

  ordered_json& root_;
  std::vector<Diagnostic>& diagnostics_;
  std::vector<Frame> stack_;
  bool too_deep_ = false;
  size_t error_position_ = 0;
  std::string error_message_;
};

class YamlConverter {
 public:
  explicit YamlConverter(std::vector<Diagnostic>& diagnostics)
      : diagnostics_(diagnostics) {}

  ordered_json Convert(const YAML::Node& node) {
    std::vector<std::string> where;
    return Convert(node, where, 0);
  }

 private:
  ordered_json Convert(const YAML::Node& node, std::vector<std::string>& where,
                       int depth) {
    if (depth > kMaxNestingDepth) {
      throw ParseError("YAML nesting exceeds " +
                           std::to_string(kMaxNestingDepth) + " levels",
                       Position(node));
    }
    if (++nodes_ > kMaxNodes) {
      throw ParseError("YAML document expands to too many nodes",
                       Position(node));
    }
    switch (node.Type()) {
      case YAML::NodeType::Undefined:
      case YAML::NodeType::Null:
        return nullptr;
      case YAML::NodeType::Scalar:
        return node.Scalar();
      case YAML::NodeType::Sequence: {
        ordered_json out = ordered_json::array();
        size_t index = 0;
        for (const YAML::Node& item : node) {
          where.push_back(std::to_string(index++));
          out.push_back(Convert(item, where, depth + 1));
          where.pop_back();
        }
        return out;
      }
      case YAML::NodeType::Map: {
        ordered_json out = ordered_json::object();
        for (const auto& kv : node) {
          if (!kv.first.IsScalar()) {
            diagnostics_.push_back(
                {JoinPointer(where), "ignoring non-scalar mapping key"});
            continue;
          }
          const std::string& key = kv.first.Scalar();
          where.push_back(key);
          if (out.contains(key)) {
            diagnostics_.push_back(
                {JoinPointer(where),
                 "duplicate key '" + key + "'; keeping the first occurrence"});
          } else {
            out[key] = Convert(kv.second, where, depth + 1);
          }
          where.pop_back();
        }
        return out;
      }
    }
    return nullptr;
  }

  static std::optional<SourcePosition> Position(const YAML::Node& node) {
    const YAML::Mark mark = node.Mark();
    if (mark.is_null()) return std::nullopt;
    return SourcePosition{mark.line + 1, mark.column + 1};
  }

  std::vector<Diagnostic>& diagnostics_;
  size_t nodes_ = 0;
};

std::optional<SourcePosition> MarkPosition(const YAML::Mark& mark) {
  if (mark.is_null()) return std::nullopt;
  return SourcePosition{mark.line + 1, mark.column + 1};
}

}  // namespace

std::string EscapePointerToken(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

Document ParseDocument(std::string_view source) {
  if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

  size_t first = 0;
  while (first < source.size() &&
         std::isspace(static_cast<unsigned char>(source[first]))) {
    ++first;
  }
  const bool looks_like_json =
      first < source.size() && (source[first] == '{' || source[first] == '[');

  std::optional<ParseError> json_error;
  if (looks_like_json) {
    Document doc;
    FirstWinsSax sax(doc.root, doc.diagnostics);
    if (ordered_json::sax_parse(source, &sax)) return doc;
    if (sax.too_deep()) {
      throw ParseError("JSON nesting exceeds " +
                           std::to_string(kMaxNestingDepth) + " levels",
                       std::nullopt);
    }
    json_error.emplace("invalid JSON: " + sax.error_message(),
                       PositionOfByte(source, sax.error_position()));
  }

  try {
    Document doc;
    // yaml-cpp wants a NUL-free string; embedded NULs are never valid YAML.
    if (source.find('\0') != std::string_view::npos) {
      throw ParseError("input contains NUL bytes",
                       PositionOfByte(source, source.find('\0')));
    }
    const YAML::Node node = YAML::Load(std::string(source));
    YamlConverter converter(doc.diagnostics);
    doc.root = converter.Convert(node);
    return doc;
  } catch (const ParseError& e) {
    if (json_error) throw *json_error;
    throw;
  } catch (const YAML::Exception& e) {
    if (json_error) throw *json_error;
    throw ParseError("invalid YAML: " + e.msg, MarkPosition(e.mark));
  } catch (const std::exception& e) {
    if (json_error) throw *json_error;
    throw ParseError(std::string("invalid YAML: ") + e.what(), std::nullopt);
  }
}

}  // namespace restlint::internal
