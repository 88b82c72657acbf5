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

#ifndef RESTLINT_CLI_H_
#define RESTLINT_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "restlint/config.h"
#include "restlint/lexicon.h"

namespace restlint {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitError = 2;

// 0 when nothing was found, 1 when violations were found, 2 on any error.
int ExitStatus(bool found_violations, bool had_error);

// True for *.json, *.yaml and *.yml.
bool HasSpecExtension(const std::filesystem::path& path);

// Spec-looking files below `root`, sorted by path.
std::vector<std::filesystem::path> DiscoverSpecFiles(
    const std::filesystem::path& root);

// Lexicon precedence: the config's lexicon_path, then `env_lexicon`
// (REST_LINT_LEXICON), then the built-in lexicon. Throws LexiconError.
WordLexicon ResolveLexicon(const LintConfig& cfg,
                           const std::optional<std::string>& env_lexicon);

// Lints each file (directories are searched for spec files) and writes one
// rendered report per spec to `out`. Errors go to `err`.
int RunLint(const std::vector<std::string>& paths, const LintConfig& cfg,
            OutputFormat format, const WordLexicon& lexicon, std::ostream& out,
            std::ostream& err);

// Each immediate subdirectory of `root` is one project; its spec files are
// linted under the subdirectory name and the corpus summary is written to
// `out`.
int RunAggregate(const std::filesystem::path& root, const LintConfig& cfg,
                 OutputFormat format, const WordLexicon& lexicon,
                 std::ostream& out, std::ostream& err);

// Entry point behind the restlint binary. `args` excludes argv[0].
int RunCli(const std::vector<std::string>& args,
           const std::optional<std::string>& env_lexicon, std::ostream& out,
           std::ostream& err);

}  // namespace restlint

#endif  // RESTLINT_CLI_H_
