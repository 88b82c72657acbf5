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

#ifndef RESTLINT_HTTP_METHOD_H_
#define RESTLINT_HTTP_METHOD_H_

#include <array>
#include <optional>
#include <string_view>

namespace restlint {

// Declaration order is the canonical sort order used in reports.
enum class HttpMethod { kGet, kPost, kPut, kDelete, kPatch, kHead, kOptions };

inline constexpr std::array<HttpMethod, 7> kAllHttpMethods = {
    HttpMethod::kGet,    HttpMethod::kPost,  HttpMethod::kPut,
    HttpMethod::kDelete, HttpMethod::kPatch, HttpMethod::kHead,
    HttpMethod::kOptions};

// Upper-case wire name, e.g. "GET".
std::string_view ToString(HttpMethod method);

// Case-insensitive; accepts "get" as well as "GET".
std::optional<HttpMethod> ParseHttpMethod(std::string_view text);

// Semantic class of a method as far as CRUD vocabulary is concerned.
// PUT and PATCH share the update class; HEAD reads like GET. OPTIONS
// has no CRUD meaning.
enum class MethodClass { kCreate, kRead, kUpdate, kDelete, kNone };

MethodClass ClassOf(HttpMethod method);

}  // namespace restlint

#endif  // RESTLINT_HTTP_METHOD_H_
