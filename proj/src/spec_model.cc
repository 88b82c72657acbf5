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

#include "restlint/spec_model.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "document.h"

namespace restlint {
namespace {

using internal::EscapePointerToken;
using nlohmann::ordered_json;

constexpr int kMaxRefHops = 32;

const ordered_json& EmptyObject() {
  static const ordered_json kEmpty = ordered_json::object();
  return kEmpty;
}

std::string Child(const std::string& base, std::string_view token) {
  return base + "/" + EscapePointerToken(token);
}

std::optional<std::string> Text(const ordered_json& node) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number() || node.is_boolean()) return node.dump();
  return std::nullopt;
}

const ordered_json* Member(const ordered_json& node, std::string_view key) {
  if (!node.is_object()) return nullptr;
  auto it = node.find(key);
  return it == node.end() ? nullptr : &*it;
}

std::optional<std::string> MemberText(const ordered_json& node,
                                      std::string_view key) {
  const ordered_json* m = Member(node, key);
  return m ? Text(*m) : std::nullopt;
}

bool IsMediaTokenChar(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) ||
         std::string_view("!#$&^_.+-*").find(c) != std::string_view::npos;
}

// type "/" subtype, optionally followed by ";" parameters.
bool IsValidMediaType(std::string_view text) {
  const size_t semi = text.find(';');
  std::string_view essence = text.substr(0, semi);
  while (!essence.empty() && essence.back() == ' ') essence.remove_suffix(1);
  const size_t slash = essence.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == essence.size()) {
    return false;
  }
  const std::string_view type = essence.substr(0, slash);
  const std::string_view subtype = essence.substr(slash + 1);
  return std::all_of(type.begin(), type.end(), IsMediaTokenChar) &&
         std::all_of(subtype.begin(), subtype.end(), IsMediaTokenChar);
}

// "default", or three characters of digits / 'X' starting with 1-5.
std::optional<std::string> NormalizeStatusKey(std::string_view key) {
  std::string k(key);
  for (char& c : k) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (k == "DEFAULT") return "default";
  if (k.size() != 3 || k[0] < '1' || k[0] > '5') return std::nullopt;
  for (char c : k) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != 'X') {
      return std::nullopt;
    }
  }
  return k;
}

std::string PercentDecode(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() &&
        std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out += static_cast<char>(
          std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

struct Parameter {
  std::string name;
  std::string in;
};

class ModelBuilder {
 public:
  ModelBuilder(const ordered_json& root, ApiSpecification& spec)
      : root_(root), spec_(spec) {}

  void Build() {
    DetectVersion();
    if (const ordered_json* info = Member(root_, "info")) {
      spec_.title = MemberText(*info, "title").value_or("");
    }
    global_consumes_ = MediaList(Member(root_, "consumes"), "/consumes");
    global_produces_ = MediaList(Member(root_, "produces"), "/produces");
    if (auto sec = Security(Member(root_, "security"), "/security")) {
      spec_.global_security = std::move(*sec);
    }
    const ordered_json* schemes =
        spec_.version_kind == VersionKind::kSwagger2
            ? Member(root_, "securityDefinitions")
            : (Member(root_, "components")
                   ? Member(*Member(root_, "components"), "securitySchemes")
                   : nullptr);
    if (schemes && schemes->is_object()) {
      for (const auto& [name, _] : schemes->items()) {
        spec_.security_schemes.insert(name);
      }
    }

    const ordered_json* paths = Member(root_, "paths");
    if (paths == nullptr || paths->is_null()) return;
    if (!paths->is_object()) {
      throw NotAnApiSpec("'paths' is not a mapping", std::nullopt);
    }
    for (const auto& [key, item] : paths->items()) {
      if (key.starts_with("x-")) continue;
      BuildPath(key, item);
    }
  }

 private:
  void Note(std::string location, std::string message) {
    spec_.diagnostics.push_back({std::move(location), std::move(message)});
  }

  void DetectVersion() {
    const auto swagger = MemberText(root_, "swagger");
    const auto openapi = MemberText(root_, "openapi");
    if (openapi) {
      if (!openapi->starts_with("3")) {
        throw NotAnApiSpec("unsupported OpenAPI version '" + *openapi + "'",
                           std::nullopt);
      }
      if (swagger)
        Note("/swagger",
             "both 'swagger' and 'openapi' present; "
             "treating as OpenAPI 3");
      spec_.version_kind = VersionKind::kOpenApi3;
      return;
    }
    if (swagger) {
      if (!swagger->starts_with("2")) {
        throw NotAnApiSpec("unsupported Swagger version '" + *swagger + "'",
                           std::nullopt);
      }
      spec_.version_kind = VersionKind::kSwagger2;
      return;
    }
    if (Member(root_, "paths") == nullptr) {
      throw NotAnApiSpec(
          "document has no 'paths' and no 'swagger'/'openapi' marker",
          std::nullopt);
    }
    bool swagger_like = false;
    for (const char* key : {"definitions", "produces", "consumes", "basePath",
                            "host", "securityDefinitions"}) {
      swagger_like = swagger_like || Member(root_, key) != nullptr;
    }
    spec_.version_kind =
        swagger_like ? VersionKind::kSwagger2 : VersionKind::kOpenApi3;
    Note("", std::string("no version marker; assuming ") +
                 (swagger_like ? "Swagger 2.0" : "OpenAPI 3"));
  }

  // Follows same-document "$ref"s. Unresolvable or remote references yield
  // an empty object and a diagnostic.
  const ordered_json& Resolve(const ordered_json& node,
                              const std::string& location) {
    const ordered_json* current = &node;
    for (int hop = 0; hop <= kMaxRefHops; ++hop) {
      const ordered_json* ref = Member(*current, "$ref");
      if (ref == nullptr) return *current;
      const std::optional<std::string> target = Text(*ref);
      if (!target) {
        Note(location, "'$ref' is not a string");
        return EmptyObject();
      }
      if (!target->starts_with("#")) {
        Note(location, "remote reference '" + *target + "' not followed");
        return EmptyObject();
      }
      try {
        const ordered_json::json_pointer pointer(
            PercentDecode(std::string_view(*target).substr(1)));
        if (!root_.contains(pointer)) {
          Note(location, "unresolved reference '" + *target + "'");
          return EmptyObject();
        }
        current = &root_.at(pointer);
      } catch (const nlohmann::json::exception&) {
        Note(location, "malformed reference '" + *target + "'");
        return EmptyObject();
      }
    }
    Note(location, "reference chain too long or cyclic");
    return EmptyObject();
  }

  std::optional<std::set<std::string>> MediaList(const ordered_json* node,
                                                 const std::string& location) {
    if (node == nullptr) return std::nullopt;
    std::set<std::string> out;
    if (!node->is_array()) {
      if (!node->is_null()) Note(location, "expected a list of media types");
      return out;
    }
    for (const ordered_json& item : *node) {
      AddMediaType(Text(item).value_or(""), location, out);
    }
    return out;
  }

  void AddMediaType(const std::string& media, const std::string& location,
                    std::set<std::string>& out) {
    if (IsValidMediaType(media)) {
      out.insert(media);
    } else {
      Note(location, "ignoring invalid media type '" + media + "'");
    }
  }

  std::set<std::string> ContentKeys(const ordered_json& holder,
                                    const std::string& location) {
    std::set<std::string> out;
    const ordered_json* content = Member(holder, "content");
    if (content == nullptr || content->is_null()) return out;
    if (!content->is_object()) {
      Note(Child(location, "content"), "'content' is not a mapping");
      return out;
    }
    for (const auto& [media, _] : content->items()) {
      AddMediaType(media, Child(location, "content"), out);
    }
    return out;
  }

  std::optional<std::vector<std::string>> Security(
      const ordered_json* node, const std::string& location) {
    if (node == nullptr) return std::nullopt;
    if (!node->is_array()) {
      Note(location, "'security' is not a list; ignoring it");
      return std::nullopt;
    }
    std::vector<std::string> names;
    for (const ordered_json& requirement : *node) {
      if (!requirement.is_object()) continue;
      for (const auto& [name, _] : requirement.items()) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
          names.push_back(name);
        }
      }
    }
    return names;
  }

  std::vector<Parameter> Parameters(const ordered_json* node,
                                    const std::string& location) {
    std::vector<Parameter> out;
    if (node == nullptr || !node->is_array()) return out;
    for (size_t i = 0; i < node->size(); ++i) {
      const std::string where = Child(location, std::to_string(i));
      const ordered_json& param = Resolve((*node)[i], where);
      const auto name = MemberText(param, "name");
      const auto in = MemberText(param, "in");
      if (!name || !in) continue;
      out.push_back({*name, *in});
    }
    return out;
  }

  void BuildPath(const std::string& key, const ordered_json& raw_item) {
    const std::string location = Child("/paths", key);
    if (key.empty() || key.front() != '/') {
      Note(location, "path template does not begin with '/'");
    }
    PathEntry entry;
    entry.path_template = key;
    const ordered_json& item = Resolve(raw_item, location);
    if (!item.is_object() && !item.is_null()) {
      Note(location, "path item is not a mapping");
    }
    const std::vector<Parameter> path_params =
        Parameters(Member(item, "parameters"), Child(location, "parameters"));
    for (const Parameter& p : path_params) {
      entry.path_level_parameters.push_back(p.name);
    }

    if (item.is_object()) {
      for (const auto& [method_key, op_node] : item.items()) {
        const std::optional<HttpMethod> method = ParseHttpMethod(method_key);
        if (!method) continue;
        const std::string op_location = Child(location, method_key);
        if (entry.operations.contains(*method)) {
          Note(op_location, "duplicate " + std::string(ToString(*method)) +
                                " operation; keeping the first occurrence");
          continue;
        }
        if (!op_node.is_object() && !op_node.is_null()) {
          Note(op_location, "operation is not a mapping; skipped");
          continue;
        }
        entry.operations.emplace(
            *method,
            BuildOperation(*method, op_node.is_null() ? EmptyObject() : op_node,
                           path_params, op_location));
      }
    }
    spec_.paths.push_back(std::move(entry));
  }

  OperationRecord BuildOperation(HttpMethod method, const ordered_json& node,
                                 const std::vector<Parameter>& path_params,
                                 const std::string& location) {
    OperationRecord op;
    op.method = method;
    op.operation_id = MemberText(node, "operationId");
    op.summary = MemberText(node, "summary");
    op.description = MemberText(node, "description");
    op.security =
        Security(Member(node, "security"), Child(location, "security"));

    std::vector<Parameter> params = path_params;
    for (Parameter& p : Parameters(Member(node, "parameters"),
                                   Child(location, "parameters"))) {
      auto same = std::find_if(params.begin(), params.end(), [&](auto& q) {
        return q.name == p.name && q.in == p.in;
      });
      if (same == params.end()) {
        params.push_back(std::move(p));
      }
    }
    for (const Parameter& p : params) {
      if (p.in == "query") op.query_parameter_names.push_back(p.name);
    }

    const bool swagger = spec_.version_kind == VersionKind::kSwagger2;
    std::set<std::string> produces;
    if (swagger) {
      bool body = false;
      for (const Parameter& p : params) {
        body = body || p.in == "body" || p.in == "formData";
      }
      op.has_request_body = body;
      if (body) {
        auto consumes =
            MediaList(Member(node, "consumes"), Child(location, "consumes"));
        op.request_media_types =
            consumes ? *consumes
                     : global_consumes_.value_or(std::set<std::string>{});
      }
      auto own =
          MediaList(Member(node, "produces"), Child(location, "produces"));
      produces =
          own ? *own : global_produces_.value_or(std::set<std::string>{});
    } else if (const ordered_json* body = Member(node, "requestBody");
               body != nullptr && !body->is_null()) {
      const std::string where = Child(location, "requestBody");
      op.has_request_body = true;
      op.request_media_types = ContentKeys(Resolve(*body, where), where);
    }

    const ordered_json* responses = Member(node, "responses");
    if (responses != nullptr && responses->is_object()) {
      const std::string base = Child(location, "responses");
      for (const auto& [raw_key, raw_response] : responses->items()) {
        if (raw_key.starts_with("x-")) continue;
        const std::string where = Child(base, raw_key);
        const std::optional<std::string> key = NormalizeStatusKey(raw_key);
        if (!key) {
          Note(where, "invalid response status key '" + raw_key + "'");
          continue;
        }
        if (op.responses.contains(*key)) {
          Note(where, "duplicate status key '" + *key + "'");
          continue;
        }
        const ordered_json& response = Resolve(raw_response, where);
        ResponseRecord record;
        record.status_key = *key;
        record.description = MemberText(response, "description");
        record.media_types = swagger ? produces : ContentKeys(response, where);
        op.responses.emplace(*key, std::move(record));
      }
    }
    if (op.responses.empty()) {
      op.no_responses_declared = true;
      Note(location, "operation declares no responses");
    }
    return op;
  }

  const ordered_json& root_;
  ApiSpecification& spec_;
  std::optional<std::set<std::string>> global_consumes_;
  std::optional<std::set<std::string>> global_produces_;
};

}  // namespace

std::string_view ToString(VersionKind kind) {
  return kind == VersionKind::kSwagger2 ? "swagger2" : "openapi3";
}

const PathEntry* ApiSpecification::FindPath(
    std::string_view path_template) const {
  for (const PathEntry& entry : paths) {
    if (entry.path_template == path_template) return &entry;
  }
  return nullptr;
}

ApiSpecification LoadSpec(std::string_view source, std::string spec_id) {
  internal::Document doc = internal::ParseDocument(source);
  if (!doc.root.is_object()) {
    throw NotAnApiSpec("top-level value is not a mapping", std::nullopt);
  }
  ApiSpecification spec;
  spec.spec_id = std::move(spec_id);
  spec.diagnostics = std::move(doc.diagnostics);
  ModelBuilder(doc.root, spec).Build();
  return spec;
}

ApiSpecification LoadSpecFile(const std::string& path, std::string spec_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file", std::nullopt);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read file", std::nullopt);
  return LoadSpec(buf.str(), std::move(spec_id));
}

bool EffectiveSecurity(const ApiSpecification& spec,
                       const OperationRecord& op) {
  if (op.security) return !op.security->empty();
  return !spec.global_security.empty();
}

ordered_json DumpSpec(const ApiSpecification& spec) {
  ordered_json out;
  out["spec_id"] = spec.spec_id;
  out["title"] = spec.title;
  out["version_kind"] = ToString(spec.version_kind);
  out["global_security"] = spec.global_security;
  out["security_schemes"] = spec.security_schemes;
  out["paths"] = ordered_json::array();
  for (const PathEntry& entry : spec.paths) {
    ordered_json p;
    p["template"] = entry.path_template;
    p["path_level_parameters"] = entry.path_level_parameters;
    p["operations"] = ordered_json::array();
    for (const auto& [method, op] : entry.operations) {
      ordered_json o;
      o["method"] = ToString(method);
      if (op.operation_id) o["operation_id"] = *op.operation_id;
      if (op.summary) o["summary"] = *op.summary;
      if (op.description) o["description"] = *op.description;
      o["has_request_body"] = op.has_request_body;
      o["request_media_types"] = op.request_media_types;
      o["responses"] = ordered_json::array();
      for (const auto& [key, response] : op.responses) {
        ordered_json r;
        r["status_key"] = key;
        if (response.description) r["description"] = *response.description;
        r["media_types"] = response.media_types;
        o["responses"].push_back(std::move(r));
      }
      if (op.security) o["security"] = *op.security;
      o["query_parameter_names"] = op.query_parameter_names;
      o["no_responses_declared"] = op.no_responses_declared;
      p["operations"].push_back(std::move(o));
    }
    out["paths"].push_back(std::move(p));
  }
  out["diagnostics"] = ordered_json::array();
  for (const Diagnostic& d : spec.diagnostics) {
    out["diagnostics"].push_back(
        {{"location", d.location}, {"message", d.message}});
  }
  return out;
}

ApiSpecification SpecFromDump(const ordered_json& dump) {
  const auto opt_text = [](const ordered_json& j, const char* key) {
    std::optional<std::string> out;
    if (j.contains(key)) out = j.at(key).get<std::string>();
    return out;
  };

  ApiSpecification spec;
  spec.spec_id = dump.at("spec_id").get<std::string>();
  spec.title = dump.at("title").get<std::string>();
  const std::string kind = dump.at("version_kind").get<std::string>();
  if (kind != "swagger2" && kind != "openapi3") {
    throw std::invalid_argument("unknown version_kind '" + kind + "'");
  }
  spec.version_kind =
      kind == "swagger2" ? VersionKind::kSwagger2 : VersionKind::kOpenApi3;
  spec.global_security =
      dump.at("global_security").get<std::vector<std::string>>();
  spec.security_schemes =
      dump.at("security_schemes").get<std::set<std::string>>();
  for (const ordered_json& p : dump.at("paths")) {
    PathEntry entry;
    entry.path_template = p.at("template").get<std::string>();
    entry.path_level_parameters =
        p.at("path_level_parameters").get<std::vector<std::string>>();
    for (const ordered_json& o : p.at("operations")) {
      OperationRecord op;
      const auto method = ParseHttpMethod(o.at("method").get<std::string>());
      if (!method) throw std::invalid_argument("unknown method in dump");
      op.method = *method;
      op.operation_id = opt_text(o, "operation_id");
      op.summary = opt_text(o, "summary");
      op.description = opt_text(o, "description");
      op.has_request_body = o.at("has_request_body").get<bool>();
      op.request_media_types =
          o.at("request_media_types").get<std::set<std::string>>();
      for (const ordered_json& r : o.at("responses")) {
        ResponseRecord record;
        record.status_key = r.at("status_key").get<std::string>();
        record.description = opt_text(r, "description");
        record.media_types = r.at("media_types").get<std::set<std::string>>();
        op.responses.emplace(record.status_key, std::move(record));
      }
      if (o.contains("security")) {
        op.security = o.at("security").get<std::vector<std::string>>();
      }
      op.query_parameter_names =
          o.at("query_parameter_names").get<std::vector<std::string>>();
      op.no_responses_declared = o.at("no_responses_declared").get<bool>();
      entry.operations.emplace(op.method, std::move(op));
    }
    spec.paths.push_back(std::move(entry));
  }
  for (const ordered_json& d : dump.at("diagnostics")) {
    spec.diagnostics.push_back({d.at("location").get<std::string>(),
                                d.at("message").get<std::string>()});
  }
  return spec;
}

}  // namespace restlint
