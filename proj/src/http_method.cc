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

#include "restlint/http_method.h"

#include <cctype>
#include <string>

namespace restlint {

std::string_view ToString(HttpMethod method) {
  switch (method) {
    case HttpMethod::kGet:
      return "GET";
    case HttpMethod::kPost:
      return "POST";
    case HttpMethod::kPut:
      return "PUT";
    case HttpMethod::kDelete:
      return "DELETE";
    case HttpMethod::kPatch:
      return "PATCH";
    case HttpMethod::kHead:
      return "HEAD";
    case HttpMethod::kOptions:
      return "OPTIONS";
  }
  return "?";
}

std::optional<HttpMethod> ParseHttpMethod(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (HttpMethod m : kAllHttpMethods) {
    if (ToString(m) == upper) return m;
  }
  return std::nullopt;
}

MethodClass ClassOf(HttpMethod method) {
  switch (method) {
    case HttpMethod::kPost:
      return MethodClass::kCreate;
    case HttpMethod::kGet:
    case HttpMethod::kHead:
      return MethodClass::kRead;
    case HttpMethod::kPut:
    case HttpMethod::kPatch:
      return MethodClass::kUpdate;
    case HttpMethod::kDelete:
      return MethodClass::kDelete;
    case HttpMethod::kOptions:
      return MethodClass::kNone;
  }
  return MethodClass::kNone;
}

}  // namespace restlint
