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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "test_util.h"

namespace restlint {
namespace {

constexpr char kMinimal[] = R"(
openapi: 3.0.0
info: {title: Minimal, version: "1"}
paths:
  /users:
    get:
      responses:
        "200":
          description: OK
)";

bool HasDiagnostic(const ApiSpecification& spec, std::string_view needle) {
  return std::any_of(spec.diagnostics.begin(), spec.diagnostics.end(),
                     [&](const Diagnostic& d) {
                       return d.message.find(needle) != std::string::npos;
                     });
}

TEST(LoadSpecTest, MinimalOpenApi3) {
  const ApiSpecification spec = LoadSpec(kMinimal, "min");
  EXPECT_EQ(spec.spec_id, "min");
  EXPECT_EQ(spec.title, "Minimal");
  EXPECT_EQ(spec.version_kind, VersionKind::kOpenApi3);
  ASSERT_EQ(spec.paths.size(), 1u);
  EXPECT_EQ(spec.paths[0].path_template, "/users");
  ASSERT_EQ(spec.paths[0].operations.size(), 1u);
  const OperationRecord& op = spec.paths[0].operations.at(HttpMethod::kGet);
  ASSERT_EQ(op.responses.size(), 1u);
  EXPECT_EQ(op.responses.at("200").description, "OK");
  EXPECT_TRUE(op.responses.at("200").media_types.empty());
  EXPECT_FALSE(op.no_responses_declared);
}

TEST(LoadSpecTest, SwaggerProducesIsInherited) {
  const ApiSpecification spec = LoadSpec(R"({
    "swagger": "2.0",
    "info": {"title": "t", "version": "1"},
    "produces": ["application/json"],
    "paths": {
      "/users": {
        "get": {"responses": {"200": {"description": "OK"}}},
        "put": {
          "produces": ["application/xml"],
          "consumes": ["application/xml"],
          "parameters": [{"name": "b", "in": "body"}],
          "responses": {"200": {"description": "OK"}}
        },
        "post": {
          "parameters": [{"name": "b", "in": "body"}],
          "responses": {"201": {"description": "Created"}}
        }
      }
    }
  })",
                                         "s2");
  EXPECT_EQ(spec.version_kind, VersionKind::kSwagger2);
  const PathEntry& users = spec.paths.at(0);
  const OperationRecord& get = users.operations.at(HttpMethod::kGet);
  EXPECT_EQ(get.responses.at("200").media_types,
            (std::set<std::string>{"application/json"}));
  EXPECT_FALSE(get.has_request_body);

  const OperationRecord& put = users.operations.at(HttpMethod::kPut);
  EXPECT_EQ(put.responses.at("200").media_types,
            (std::set<std::string>{"application/xml"}));
  EXPECT_TRUE(put.has_request_body);
  EXPECT_EQ(put.request_media_types,
            (std::set<std::string>{"application/xml"}));

  // Body without any consumes declaration.
  const OperationRecord& post = users.operations.at(HttpMethod::kPost);
  EXPECT_TRUE(post.has_request_body);
  EXPECT_TRUE(post.request_media_types.empty());
}

TEST(LoadSpecTest, SwaggerFormDataIsARequestBody) {
  const ApiSpecification spec = LoadSpec(R"(
swagger: "2.0"
consumes: [application/x-www-form-urlencoded]
paths:
  /sessions:
    post:
      parameters:
        - {name: user, in: formData, type: string}
        - {name: verbose, in: query, type: boolean}
      responses: {"201": {description: ok}}
)",
                                         "form");
  const OperationRecord& op = spec.paths[0].operations.at(HttpMethod::kPost);
  EXPECT_TRUE(op.has_request_body);
  EXPECT_EQ(op.request_media_types,
            (std::set<std::string>{"application/x-www-form-urlencoded"}));
  EXPECT_EQ(op.query_parameter_names, (std::vector<std::string>{"verbose"}));
}

TEST(LoadSpecTest, MalformedYamlIsParseError) {
  try {
    LoadSpec("not: [valid", "bad");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("YAML"), std::string::npos);
    EXPECT_TRUE(e.position().has_value());
  }
}

TEST(LoadSpecTest, MalformedJsonReportsPosition) {
  try {
    LoadSpec("{\n  \"openapi\": \"3.0.0\",\n  \"paths\": {\"a\": ]}\n}", "bad");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.position().has_value());
    EXPECT_EQ(e.position()->line, 3);
  }
}

TEST(LoadSpecTest, NonSpecDocuments) {
  EXPECT_THROW(LoadSpec("{\"name\": \"package\"}", "x"), NotAnApiSpec);
  EXPECT_THROW(LoadSpec("just a scalar", "x"), NotAnApiSpec);
  EXPECT_THROW(LoadSpec("", "x"), NotAnApiSpec);
  EXPECT_THROW(LoadSpec("[1, 2, 3]", "x"), NotAnApiSpec);
  EXPECT_THROW(LoadSpec("swagger: '1.2'\npaths: {}\n", "x"), NotAnApiSpec);
  EXPECT_THROW(LoadSpec("openapi: 3.0.0\npaths: [1]\n", "x"), NotAnApiSpec);
}

TEST(LoadSpecTest, MarkerWithoutPathsIsAnEmptySpec) {
  const ApiSpecification spec = LoadSpec("openapi: 3.1.0\n", "x");
  EXPECT_TRUE(spec.paths.empty());
}

TEST(LoadSpecTest, PathsWithoutMarkerAreGuessed) {
  const ApiSpecification spec =
      LoadSpec("basePath: /v1\npaths:\n  /a:\n    get: {}\n", "x");
  EXPECT_EQ(spec.version_kind, VersionKind::kSwagger2);
  EXPECT_TRUE(HasDiagnostic(spec, "no version marker"));
}

TEST(LoadSpecTest, YamlFlowMappingFallsBackFromJson) {
  const ApiSpecification spec =
      LoadSpec("{openapi: 3.0.0, paths: {/a: {get: {}}}}", "flow");
  ASSERT_EQ(spec.paths.size(), 1u);
  EXPECT_TRUE(
      spec.paths[0].operations.at(HttpMethod::kGet).no_responses_declared);
}

TEST(LoadSpecTest, KeepsSourceOrderOfPaths) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /zebras: {}
  /apples: {}
  /mangos: {}
)",
                                         "order");
  ASSERT_EQ(spec.paths.size(), 3u);
  EXPECT_EQ(spec.paths[0].path_template, "/zebras");
  EXPECT_EQ(spec.paths[1].path_template, "/apples");
  EXPECT_EQ(spec.paths[2].path_template, "/mangos");
}

TEST(LoadSpecTest, DuplicatePathKeepsFirstInJson) {
  const ApiSpecification spec = LoadSpec(R"({
    "openapi": "3.0.0",
    "paths": {
      "/users": {"get": {"summary": "first", "responses": {"200": {}}}},
      "/users": {"post": {"summary": "second", "responses": {"201": {}}}}
    }
  })",
                                         "dup");
  ASSERT_EQ(spec.paths.size(), 1u);
  EXPECT_TRUE(spec.paths[0].operations.contains(HttpMethod::kGet));
  EXPECT_FALSE(spec.paths[0].operations.contains(HttpMethod::kPost));
  ASSERT_TRUE(HasDiagnostic(spec, "duplicate key '/users'"));
  EXPECT_EQ(spec.diagnostics[0].location, "/paths/~1users");
}

TEST(LoadSpecTest, DuplicatePathKeepsFirstInYaml) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /users:
    get: {responses: {"200": {description: a}}}
  /users:
    post: {responses: {"201": {description: b}}}
)",
                                         "dup");
  ASSERT_EQ(spec.paths.size(), 1u);
  EXPECT_TRUE(spec.paths[0].operations.contains(HttpMethod::kGet));
  EXPECT_TRUE(HasDiagnostic(spec, "duplicate key '/users'"));
}

TEST(LoadSpecTest, DuplicateMethodKeepsFirst) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /users:
    get: {summary: lower, responses: {"200": {description: a}}}
    GET: {summary: upper, responses: {"200": {description: b}}}
)",
                                         "dup");
  const PathEntry& p = spec.paths.at(0);
  ASSERT_EQ(p.operations.size(), 1u);
  EXPECT_EQ(p.operations.at(HttpMethod::kGet).summary, "lower");
  EXPECT_TRUE(HasDiagnostic(spec, "duplicate GET operation"));
}

TEST(LoadSpecTest, PathWithoutLeadingSlashIsKeptWithDiagnostic) {
  const ApiSpecification spec =
      LoadSpec("openapi: 3.0.0\npaths:\n  users: {}\n", "x");
  ASSERT_EQ(spec.paths.size(), 1u);
  EXPECT_EQ(spec.paths[0].path_template, "users");
  EXPECT_TRUE(HasDiagnostic(spec, "does not begin with '/'"));
}

TEST(LoadSpecTest, LocalReferencesAreResolved) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /users:
    $ref: '#/components/pathItems/Users'
components:
  pathItems:
    Users:
      post:
        parameters:
          - $ref: '#/components/parameters/Method'
        requestBody:
          $ref: '#/components/requestBodies/User'
        responses:
          "201":
            $ref: '#/components/responses/Created'
  parameters:
    Method: {name: _method, in: query}
  requestBodies:
    User:
      content:
        application/json: {}
  responses:
    Created:
      $ref: '#/components/responses/Created2'
    Created2:
      description: made
      content:
        application/hal+json: {}
)",
                                         "refs");
  const OperationRecord& op = spec.paths.at(0).operations.at(HttpMethod::kPost);
  EXPECT_EQ(op.request_media_types,
            (std::set<std::string>{"application/json"}));
  EXPECT_EQ(op.responses.at("201").description, "made");
  EXPECT_EQ(op.responses.at("201").media_types,
            (std::set<std::string>{"application/hal+json"}));
  EXPECT_EQ(op.query_parameter_names, (std::vector<std::string>{"_method"}));
  EXPECT_TRUE(spec.diagnostics.empty());
}

TEST(LoadSpecTest, RemoteAndBrokenReferencesBecomeEmpty) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /a:
    get:
      responses:
        "200": {$ref: 'other.yaml#/components/responses/Ok'}
        "404": {$ref: '#/components/responses/Missing'}
        "500": {$ref: '#/components/responses/Loop'}
components:
  responses:
    Loop: {$ref: '#/components/responses/Loop'}
)",
                                         "refs");
  const OperationRecord& op = spec.paths.at(0).operations.at(HttpMethod::kGet);
  ASSERT_EQ(op.responses.size(), 3u);
  for (const auto& [key, r] : op.responses) {
    EXPECT_TRUE(r.media_types.empty()) << key;
    EXPECT_FALSE(r.description.has_value()) << key;
  }
  EXPECT_TRUE(HasDiagnostic(spec, "remote reference"));
  EXPECT_TRUE(HasDiagnostic(spec, "unresolved reference"));
  EXPECT_TRUE(HasDiagnostic(spec, "cyclic"));
}

TEST(LoadSpecTest, StatusKeysAreNormalized) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /a:
    get:
      responses:
        200: {description: ok}
        4xx: {description: range}
        Default: {description: fallback}
        600: {description: bogus}
        abc: {description: bogus}
        x-extension: {}
)",
                                         "keys");
  const OperationRecord& op = spec.paths.at(0).operations.at(HttpMethod::kGet);
  std::vector<std::string> keys;
  for (const auto& [key, _] : op.responses) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"200", "4XX", "default"}));
  EXPECT_TRUE(HasDiagnostic(spec, "invalid response status key '600'"));
  EXPECT_TRUE(HasDiagnostic(spec, "invalid response status key 'abc'"));
}

TEST(LoadSpecTest, InvalidMediaTypesAreDropped) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
paths:
  /a:
    get:
      responses:
        "200":
          content:
            application/json: {}
            "text/plain; charset=utf-8": {}
            json: {}
            "*/*": {}
)",
                                         "media");
  EXPECT_EQ(spec.paths[0]
                .operations.at(HttpMethod::kGet)
                .responses.at("200")
                .media_types,
            (std::set<std::string>{"*/*", "application/json",
                                   "text/plain; charset=utf-8"}));
  EXPECT_TRUE(HasDiagnostic(spec, "invalid media type 'json'"));
}

TEST(LoadSpecTest, NoResponsesIsFlagged) {
  const ApiSpecification spec =
      LoadSpec("openapi: 3.0.0\npaths:\n  /a:\n    get:\n", "x");
  EXPECT_TRUE(
      spec.paths[0].operations.at(HttpMethod::kGet).no_responses_declared);
  EXPECT_TRUE(HasDiagnostic(spec, "declares no responses"));
}

TEST(LoadSpecTest, SecurityIsNormalized) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
security: [{bearer: []}, {apiKey: [], bearer: []}]
components:
  securitySchemes:
    bearer: {type: http, scheme: bearer}
    apiKey: {type: apiKey, in: header, name: X-Key}
paths:
  /a:
    get: {responses: {"200": {description: ok}}}
    post: {security: [], responses: {"200": {description: ok}}}
    put: {security: [{}], responses: {"200": {description: ok}}}
)",
                                         "sec");
  EXPECT_EQ(spec.global_security,
            (std::vector<std::string>{"bearer", "apiKey"}));
  EXPECT_EQ(spec.security_schemes, (std::set<std::string>{"apiKey", "bearer"}));
  const auto& ops = spec.paths[0].operations;
  EXPECT_FALSE(ops.at(HttpMethod::kGet).security.has_value());
  EXPECT_EQ(ops.at(HttpMethod::kPost).security, std::vector<std::string>{});
  EXPECT_EQ(ops.at(HttpMethod::kPut).security, std::vector<std::string>{});
}

TEST(EffectiveSecurityTest, Examples) {
  ApiSpecification spec;
  OperationRecord op;

  spec.global_security = {"bearer"};
  op.security.reset();
  EXPECT_TRUE(EffectiveSecurity(spec, op));

  op.security = std::vector<std::string>{};
  EXPECT_FALSE(EffectiveSecurity(spec, op));

  spec.global_security.clear();
  op.security.reset();
  EXPECT_FALSE(EffectiveSecurity(spec, op));

  op.security = std::vector<std::string>{"oauth"};
  EXPECT_TRUE(EffectiveSecurity(spec, op));
}

TEST(EffectiveSecurityTest, ExplicitOptOutFromDocument) {
  const ApiSpecification spec = LoadSpec(R"(
openapi: 3.0.0
security: [{bearer: []}]
paths:
  /a:
    get: {security: [], responses: {"200": {description: ok}}}
    post: {responses: {"200": {description: ok}}}
)",
                                         "sec");
  const auto& ops = spec.paths[0].operations;
  EXPECT_FALSE(EffectiveSecurity(spec, ops.at(HttpMethod::kGet)));
  EXPECT_TRUE(EffectiveSecurity(spec, ops.at(HttpMethod::kPost)));
}

std::vector<std::string> FixtureNames() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(
           testing::TestDataDir() / "fixtures" / "rules")) {
    names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

TEST(LoadSpecTest, LoadingIsDeterministic) {
  for (const std::string& name : FixtureNames()) {
    const std::string bytes = testing::ReadFile(testing::RuleFixture(name));
    EXPECT_EQ(LoadSpec(bytes, name), LoadSpec(bytes, name)) << name;
  }
}

TEST(DumpSpecTest, RoundTripsThroughSerializedDump) {
  for (const std::string& name : FixtureNames()) {
    const ApiSpecification spec =
        LoadSpecFile(testing::RuleFixture(name).string(), name);
    const std::string text = DumpSpec(spec).dump(2);
    EXPECT_EQ(SpecFromDump(nlohmann::ordered_json::parse(text)), spec) << name;
  }
  const ApiSpecification with_diagnostics =
      LoadSpec("basePath: /x\npaths:\n  a:\n    get:\n", "d");
  ASSERT_FALSE(with_diagnostics.diagnostics.empty());
  EXPECT_EQ(SpecFromDump(DumpSpec(with_diagnostics)), with_diagnostics);
}

TEST(DumpSpecTest, HasDocumentedTopLevelFields) {
  const auto dump = DumpSpec(LoadSpec(kMinimal, "min"));
  EXPECT_EQ(dump.at("spec_id"), "min");
  EXPECT_EQ(dump.at("title"), "Minimal");
  EXPECT_EQ(dump.at("version_kind"), "openapi3");
  EXPECT_EQ(dump.at("paths").at(0).at("template"), "/users");
}

TEST(LoadSpecTest, DeepNestingIsRejected) {
  const std::string json_deep =
      std::string(100000, '[') + std::string(100000, ']');
  EXPECT_THROW(LoadSpec(json_deep, "deep"), ParseError);
  std::string yaml_deep = "a: ";
  for (int i = 0; i < 5000; ++i) yaml_deep += "[";
  EXPECT_THROW(LoadSpec(yaml_deep, "deep"), ParseError);
}

TEST(LoadSpecTest, AliasExpansionIsBounded) {
  // Each level doubles the expanded size.
  std::string bomb = "a0: &a0 [x, x]\n";
  for (int i = 1; i < 40; ++i) {
    bomb += "a" + std::to_string(i) + ": &a" + std::to_string(i) + " [*a" +
            std::to_string(i - 1) + ", *a" + std::to_string(i - 1) + "]\n";
  }
  bomb += "openapi: 3.0.0\npaths: {}\n";
  EXPECT_THROW(LoadSpec(bomb, "bomb"), ParseError);
}

TEST(LoadSpecTest, UnreadableFileIsParseError) {
  EXPECT_THROW(LoadSpecFile("/nonexistent/spec.yaml", "x"), ParseError);
}

TEST(LoadSpecTest, MutatedInputsNeverEscapeTheErrorTypes) {
  std::mt19937 rng(2024);
  const std::vector<std::string> names = FixtureNames();
  for (int i = 0; i < 600; ++i) {
    std::string bytes =
        testing::ReadFile(testing::RuleFixture(names[rng() % names.size()]));
    const int edits = 1 + static_cast<int>(rng() % 8);
    for (int e = 0; e < edits && !bytes.empty(); ++e) {
      const size_t at = rng() % bytes.size();
      switch (rng() % 3) {
        case 0:
          bytes[at] = static_cast<char>(rng() % 256);
          break;
        case 1:
          bytes.erase(at, 1 + rng() % 16);
          break;
        default:
          bytes.insert(at, 1, "{}[]:,'\"&*!\n -"[rng() % 15]);
          break;
      }
    }
    try {
      LoadSpec(bytes, "fuzz");
    } catch (const LoadError&) {
    }
  }
}

}  // namespace
}  // namespace restlint
