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

#include "restlint/rules.h"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace restlint {
namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  RuleCategory category;
  Checker checker;
};

constexpr std::array<RuleInfo, kRuleCount> kRuleTable = {{
    {RuleId::kRc401, "RC401", RuleCategory::kHttpStatusCodes, &CheckRc401},
    {RuleId::kPluralNoun, "PluralNoun", RuleCategory::kUriDesign,
     &CheckPluralNoun},
    {RuleId::kSingularNoun, "SingularNoun", RuleCategory::kUriDesign,
     &CheckSingularNoun},
    {RuleId::kNoTrailingSlash, "NoTrailingSlash", RuleCategory::kUriDesign,
     &CheckNoTrailingSlash},
    {RuleId::kVerbController, "VerbController", RuleCategory::kUriDesign,
     &CheckVerbController},
    {RuleId::kNoCrudNames, "NoCRUDNames", RuleCategory::kUriDesign,
     &CheckNoCrudNames},
    {RuleId::kContentType, "ContentType", RuleCategory::kMetadataDesign,
     &CheckContentType},
    {RuleId::kDescriptionType, "DescriptionType", RuleCategory::kMetadataDesign,
     &CheckDescriptionType},
    {RuleId::kForwardSlash, "ForwardSlash", RuleCategory::kUriDesign,
     &CheckForwardSlash},
    {RuleId::kNoTunnel, "NoTunnel", RuleCategory::kRequestMethods,
     &CheckNoTunnel},
    {RuleId::kGetRetrieve, "GETRetrieve", RuleCategory::kRequestMethods,
     &CheckGetRetrieve},
    {RuleId::kHyphens, "Hyphens", RuleCategory::kUriDesign, &CheckHyphens},
    {RuleId::kLowercase, "Lowercase", RuleCategory::kUriDesign,
     &CheckLowercase},
    {RuleId::kNoUnderscores, "NoUnderscores", RuleCategory::kUriDesign,
     &CheckNoUnderscores},
}};

const RuleInfo& Info(RuleId rule) { return kRuleTable[IndexOf(rule)]; }

std::string Quote(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string_view ClassName(MethodClass c) {
  switch (c) {
    case MethodClass::kCreate:
      return "create";
    case MethodClass::kRead:
      return "read";
    case MethodClass::kUpdate:
      return "update";
    case MethodClass::kDelete:
      return "delete";
    case MethodClass::kNone:
      return "none";
  }
  return "none";
}

// Segment text that counts as URI text: parameter segments contribute only
// when parameter names are not exempt, and embedded "{...}" expressions in
// literal segments are dropped under the same switch.
std::string InspectedText(const Segment& seg, bool exempt_parameters) {
  if (seg.is_parameter()) return exempt_parameters ? "" : seg.name;
  if (!exempt_parameters) return seg.raw;
  std::string out;
  for (size_t i = 0; i < seg.raw.size(); ++i) {
    if (seg.raw[i] == '{') {
      const size_t close = seg.raw.find('}', i);
      if (close != std::string::npos) {
        i = close;
        continue;
      }
    }
    out += seg.raw[i];
  }
  return out;
}

std::string LiteralOnlyText(const Segment& seg) {
  return seg.is_parameter() ? "" : InspectedText(seg, true);
}

Violation PathViolation(const LintContext& ctx, RuleId rule,
                        const AnalyzedPath& path, std::string fragment,
                        std::string message) {
  Violation v;
  v.rule = rule;
  v.spec_id = ctx.spec().spec_id;
  v.path = path.entry->path_template;
  v.fragment = std::move(fragment);
  v.message = std::move(message);
  return v;
}

Violation OperationViolation(const LintContext& ctx, RuleId rule,
                             const AnalyzedPath& path, HttpMethod method,
                             std::string fragment, std::string message) {
  Violation v =
      PathViolation(ctx, rule, path, std::move(fragment), std::move(message));
  v.method = method;
  return v;
}

// Word tokens that describe what an operation does: every literal path
// word plus the words of its operationId.
std::vector<std::string> ActionTokens(const AnalyzedPath& path,
                                      const OperationRecord& op) {
  std::vector<std::string> out;
  for (const Segment& seg : path.tmpl.segments) {
    if (seg.is_parameter()) continue;
    out.insert(out.end(), seg.words.begin(), seg.words.end());
  }
  if (op.operation_id) {
    WordSplit split = SplitWords(*op.operation_id);
    out.insert(out.end(), split.words.begin(), split.words.end());
  }
  return out;
}

// CRUD tokens among `tokens` whose class differs from `allowed`.
std::vector<std::pair<std::string, HttpMethod>> ForeignCrudTokens(
    const WordLexicon& lex, const std::vector<std::string>& tokens,
    MethodClass allowed) {
  std::vector<std::pair<std::string, HttpMethod>> out;
  for (const std::string& t : tokens) {
    const std::optional<HttpMethod> m = lex.CrudMethodOf(t);
    if (m && ClassOf(*m) != allowed) out.emplace_back(t, *m);
  }
  return out;
}

bool BodyBearingStatus(std::string_view key) {
  return key != "204" && key != "304" && !key.starts_with('1');
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::string_view ToString(RuleId rule) { return Info(rule).name; }

std::optional<RuleId> ParseRuleId(std::string_view text) {
  for (const RuleInfo& info : kRuleTable) {
    if (info.name == text) return info.id;
  }
  return std::nullopt;
}

RuleCategory CategoryOf(RuleId rule) { return Info(rule).category; }

std::string_view ToString(RuleCategory category) {
  switch (category) {
    case RuleCategory::kHttpStatusCodes:
      return "HTTPStatusCodes";
    case RuleCategory::kUriDesign:
      return "URIDesign";
    case RuleCategory::kMetadataDesign:
      return "MetadataDesign";
    case RuleCategory::kRequestMethods:
      return "RequestMethods";
  }
  return "URIDesign";
}

Checker CheckerFor(RuleId rule) { return Info(rule).checker; }

bool Violation::SameLocation(const Violation& other) const {
  return std::tie(rule, spec_id, path, method, status_key, fragment) ==
         std::tie(other.rule, other.spec_id, other.path, other.method,
                  other.status_key, other.fragment);
}

bool ViolationLess(const Violation& a, const Violation& b) {
  return std::tie(a.path, a.method, a.rule, a.fragment, a.status_key, a.spec_id,
                  a.message) < std::tie(b.path, b.method, b.rule, b.fragment,
                                        b.status_key, b.spec_id, b.message);
}

void SortAndCoalesce(std::vector<Violation>& violations) {
  std::sort(violations.begin(), violations.end(), ViolationLess);
  violations.erase(std::unique(violations.begin(), violations.end(),
                               [](const Violation& a, const Violation& b) {
                                 return a.SameLocation(b);
                               }),
                   violations.end());
}

LintContext::LintContext(const ApiSpecification& spec,
                         const WordLexicon& lexicon, const RuleConfig& config)
    : spec_(spec), lexicon_(lexicon), config_(config) {
  paths_.reserve(spec.paths.size());
  for (const PathEntry& entry : spec.paths) {
    AnalyzedPath analyzed{&entry, TokenizePath(entry.path_template)};
    ClassifyArchetypes(analyzed.tmpl, lexicon);
    for (const ArchetypeOverride& o : config.archetype_overrides) {
      if (o.spec_id != spec.spec_id || o.path != entry.path_template) continue;
      if (o.segment_index >= analyzed.tmpl.segments.size()) continue;
      Segment& seg = analyzed.tmpl.segments[o.segment_index];
      if (!seg.is_parameter()) seg.archetype = o.archetype;
    }
    paths_.push_back(std::move(analyzed));
  }
}

std::vector<Violation> CheckRc401(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const auto& [method, op] : path.entry->operations) {
      if (!EffectiveSecurity(ctx.spec(), op)) continue;
      if (op.responses.contains("401") || op.responses.contains("4XX")) {
        continue;
      }
      out.push_back(OperationViolation(
          ctx, RuleId::kRc401, path, method, "401",
          "operation requires credentials but declares no 401 response"));
    }
  }
  return out;
}

std::vector<Violation> CheckPluralNoun(const LintContext& ctx) {
  std::vector<Violation> out;
  const WordLexicon& lex = ctx.lexicon();
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (seg.is_parameter() || seg.archetype != Archetype::kCollection) {
        continue;
      }
      const std::string_view head = seg.head_word();
      if (head.empty() || lex.IsPlural(head) || lex.IsInvariant(head)) {
        continue;
      }
      out.push_back(PathViolation(ctx, RuleId::kPluralNoun, path, seg.raw,
                                  "collection " + Quote(seg.raw) +
                                      " should be named by a plural "
                                      "noun"));
    }
  }
  return out;
}

std::vector<Violation> CheckSingularNoun(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (seg.is_parameter() || seg.archetype != Archetype::kDocument) {
        continue;
      }
      const std::string_view head = seg.head_word();
      if (head.empty() || !ctx.lexicon().IsPlural(head)) continue;
      out.push_back(PathViolation(ctx, RuleId::kSingularNoun, path, seg.raw,
                                  "document " + Quote(seg.raw) +
                                      " should be named by a singular "
                                      "noun"));
    }
  }
  return out;
}

std::vector<Violation> CheckNoTrailingSlash(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    if (!path.tmpl.has_trailing_slash) continue;
    out.push_back(PathViolation(ctx, RuleId::kNoTrailingSlash, path, "/",
                                "path ends with a trailing slash"));
  }
  return out;
}

std::vector<Violation> CheckVerbController(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (seg.is_parameter() || seg.archetype != Archetype::kController) {
        continue;
      }
      if (ctx.lexicon().IsVerb(seg.first_word())) continue;
      out.push_back(PathViolation(ctx, RuleId::kVerbController, path, seg.raw,
                                  "controller " + Quote(seg.raw) +
                                      " should be named by a verb or "
                                      "verb phrase"));
    }
  }
  return out;
}

std::vector<Violation> CheckNoCrudNames(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (seg.is_parameter()) continue;
      for (const std::string& word : seg.words) {
        const std::optional<HttpMethod> m = ctx.lexicon().CrudMethodOf(word);
        if (!m) continue;
        out.push_back(PathViolation(
            ctx, RuleId::kNoCrudNames, path, seg.raw,
            "segment " + Quote(seg.raw) + " contains CRUD token " +
                Quote(word) + "; use the " + std::string(ToString(*m)) +
                " method instead"));
        break;
      }
    }
  }
  return out;
}

std::vector<Violation> CheckContentType(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const auto& [method, op] : path.entry->operations) {
      if (op.has_request_body && op.request_media_types.empty()) {
        out.push_back(OperationViolation(
            ctx, RuleId::kContentType, path, method, "requestBody",
            "request body declares no content type"));
      }
      // HEAD responses never carry a body.
      if (method == HttpMethod::kHead) continue;
      for (const auto& [key, response] : op.responses) {
        if (!BodyBearingStatus(key) || !response.media_types.empty()) continue;
        Violation v = OperationViolation(
            ctx, RuleId::kContentType, path, method, "responses/" + key,
            "response " + key + " declares no content type");
        v.status_key = key;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckDescriptionType(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const auto& [method, op] : path.entry->operations) {
      const MethodClass own = ClassOf(method);
      if (own == MethodClass::kNone) continue;
      const auto non_blank = [](const std::optional<std::string>& s) {
        return s && s->find_first_not_of(" \t\r\n") != std::string::npos;
      };
      const std::optional<std::string>& text =
          non_blank(op.description) ? op.description : op.summary;
      if (!non_blank(text)) continue;

      const size_t begin = text->find_first_not_of(" \t\r\n");
      const size_t end = text->find_first_of(" \t\r\n", begin);
      const WordSplit split = SplitWords(text->substr(begin, end - begin));
      if (split.words.empty()) continue;
      const std::string& word = split.words.front();
      const std::optional<HttpMethod> m = ctx.lexicon().CrudMethodOf(word);
      if (!m || ClassOf(*m) == own) continue;
      out.push_back(OperationViolation(
          ctx, RuleId::kDescriptionType, path, method, word,
          "description starts with " + Quote(word) + " (" +
              std::string(ClassName(ClassOf(*m))) + ") but the operation is " +
              std::string(ToString(method))));
    }
  }
  return out;
}

std::vector<Violation> CheckForwardSlash(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    if (path.tmpl.has_empty_segment) {
      out.push_back(PathViolation(ctx, RuleId::kForwardSlash, path, "//",
                                  "path contains an empty segment"));
    }
    for (const Segment& seg : path.tmpl.segments) {
      const std::string text = LiteralOnlyText(seg);
      for (size_t i = 1; i + 1 < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != ':' && c != ';') continue;
        if (!std::isalnum(static_cast<unsigned char>(text[i - 1])) ||
            !std::isalnum(static_cast<unsigned char>(text[i + 1]))) {
          continue;
        }
        out.push_back(PathViolation(ctx, RuleId::kForwardSlash, path, seg.raw,
                                    "segment " + Quote(seg.raw) + " uses " +
                                        Quote(std::string(1, c)) +
                                        " as a hierarchy separator; use '/'"));
        break;
      }
    }
  }
  return out;
}

std::vector<Violation> CheckNoTunnel(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const auto& [method, op] : path.entry->operations) {
      if (method != HttpMethod::kGet && method != HttpMethod::kPost) continue;
      for (const auto& [token, target] : ForeignCrudTokens(
               ctx.lexicon(), ActionTokens(path, op), ClassOf(method))) {
        out.push_back(
            OperationViolation(ctx, RuleId::kNoTunnel, path, method, token,
                               std::string(ToString(method)) + " tunnels " +
                                   std::string(ToString(target)) +
                                   " semantics via " + Quote(token)));
      }
      for (const std::string& name : op.query_parameter_names) {
        const std::string lower = Lower(name);
        if (lower != "method" && lower != "_method" && lower != "action") {
          continue;
        }
        out.push_back(OperationViolation(
            ctx, RuleId::kNoTunnel, path, method, name,
            "query parameter " + Quote(name) + " selects the request method"));
      }
    }
  }
  return out;
}

std::vector<Violation> CheckGetRetrieve(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    const auto it = path.entry->operations.find(HttpMethod::kGet);
    if (it == path.entry->operations.end()) continue;
    const OperationRecord& op = it->second;
    if (op.has_request_body) {
      out.push_back(OperationViolation(ctx, RuleId::kGetRetrieve, path,
                                       HttpMethod::kGet, "requestBody",
                                       "GET operation takes a request body"));
    }
    for (const auto& [token, target] : ForeignCrudTokens(
             ctx.lexicon(), ActionTokens(path, op), MethodClass::kRead)) {
      out.push_back(OperationViolation(
          ctx, RuleId::kGetRetrieve, path, HttpMethod::kGet, token,
          "GET used for " + std::string(ToString(target)) + " semantics (" +
              Quote(token) + ")"));
    }
  }
  return out;
}

std::vector<Violation> CheckHyphens(const LintContext& ctx) {
  std::vector<Violation> out;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (seg.is_parameter() || seg.words.size() < 2) continue;
      if ((seg.boundaries & (kBoundaryCase | kBoundaryUnderscore)) == 0) {
        continue;
      }
      out.push_back(PathViolation(ctx, RuleId::kHyphens, path, seg.raw,
                                  "multi-word segment " + Quote(seg.raw) +
                                      " should separate words with hyphens"));
    }
  }
  return out;
}

std::vector<Violation> CheckLowercase(const LintContext& ctx) {
  std::vector<Violation> out;
  const bool exempt = ctx.config().exempt_parameter_names;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      const std::string text = InspectedText(seg, exempt);
      if (std::none_of(text.begin(), text.end(), [](char c) {
            return std::isupper(static_cast<unsigned char>(c));
          })) {
        continue;
      }
      out.push_back(PathViolation(
          ctx, RuleId::kLowercase, path, seg.raw,
          "segment " + Quote(seg.raw) + " contains uppercase letters"));
    }
  }
  return out;
}

std::vector<Violation> CheckNoUnderscores(const LintContext& ctx) {
  std::vector<Violation> out;
  const bool exempt = ctx.config().exempt_parameter_names;
  for (const AnalyzedPath& path : ctx.paths()) {
    for (const Segment& seg : path.tmpl.segments) {
      if (InspectedText(seg, exempt).find('_') == std::string::npos) continue;
      out.push_back(
          PathViolation(ctx, RuleId::kNoUnderscores, path, seg.raw,
                        "segment " + Quote(seg.raw) + " contains underscores"));
    }
  }
  return out;
}

std::vector<Violation> RunRules(const ApiSpecification& spec,
                                const RuleConfig& config,
                                const WordLexicon& lexicon) {
  std::vector<Violation> all;
  if (config.enabled.empty()) return all;
  const LintContext ctx(spec, lexicon, config);
  for (RuleId rule : kAllRules) {
    if (!config.enabled.contains(rule)) continue;
    std::vector<Violation> found = CheckerFor(rule)(ctx);
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  SortAndCoalesce(all);
  return all;
}

}  // namespace restlint
