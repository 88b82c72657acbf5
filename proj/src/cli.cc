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

#include "restlint/cli.h"

#include <algorithm>
#include <system_error>

#include "CLI11.hpp"
#include "restlint/report.h"
#include "restlint/rules.h"
#include "restlint/spec_model.h"

namespace restlint {
namespace {

namespace fs = std::filesystem;

std::string Where(const LoadError& e) {
  if (!e.position()) return "";
  return std::to_string(e.position()->line) + ":" +
         std::to_string(e.position()->column) + ": ";
}

void PrintDiagnostics(const ApiSpecification& spec, const std::string& file,
                      std::ostream& err) {
  for (const Diagnostic& d : spec.diagnostics) {
    err << file << ": warning: ";
    if (!d.location.empty()) err << d.location << ": ";
    err << d.message << "\n";
  }
}

enum class LoadOutcome { kLoaded, kSkipped, kFailed };

// Loads one file. `lenient` turns NotAnApiSpec into a skip notice, which is
// how files found by directory discovery are treated.
LoadOutcome TryLoad(const fs::path& file, const std::string& spec_id,
                    bool lenient, std::ostream& err,
                    std::optional<ApiSpecification>& spec) {
  const std::string name = file.generic_string();
  try {
    spec = LoadSpecFile(file.string(), spec_id);
    PrintDiagnostics(*spec, name, err);
    return LoadOutcome::kLoaded;
  } catch (const NotAnApiSpec& e) {
    if (lenient) {
      err << name << ": notice: skipping non-spec file: " << e.what() << "\n";
      return LoadOutcome::kSkipped;
    }
    err << name << ": error: " << Where(e) << e.what() << "\n";
  } catch (const ParseError& e) {
    err << name << ": error: " << Where(e) << e.what() << "\n";
  }
  return LoadOutcome::kFailed;
}

}  // namespace

int ExitStatus(bool found_violations, bool had_error) {
  if (had_error) return kExitError;
  return found_violations ? kExitViolations : kExitClean;
}

bool HasSpecExtension(const fs::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".json" || ext == ".yaml" || ext == ".yml";
}

std::vector<fs::path> DiscoverSpecFiles(const fs::path& root) {
  std::vector<fs::path> out;
  std::error_code ec;
  for (fs::recursive_directory_iterator it(root, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file(ec) && HasSpecExtension(it->path())) {
      out.push_back(it->path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WordLexicon ResolveLexicon(const LintConfig& cfg,
                           const std::optional<std::string>& env_lexicon) {
  if (cfg.lexicon_path) return WordLexicon::LoadFile(*cfg.lexicon_path);
  if (env_lexicon && !env_lexicon->empty()) {
    return WordLexicon::LoadFile(*env_lexicon);
  }
  return WordLexicon::Default();
}

int RunLint(const std::vector<std::string>& paths, const LintConfig& cfg,
            OutputFormat format, const WordLexicon& lexicon, std::ostream& out,
            std::ostream& err) {
  if (format == OutputFormat::kCsv) {
    err << "error: lint supports --format text or json\n";
    return kExitError;
  }
  const RuleConfig rules = cfg.ToRuleConfig();
  bool had_error = false;
  bool found = false;

  const auto lint_one = [&](const fs::path& file, const std::string& spec_id,
                            bool lenient) {
    std::optional<ApiSpecification> spec;
    switch (TryLoad(file, spec_id, lenient, err, spec)) {
      case LoadOutcome::kLoaded:
        break;
      case LoadOutcome::kSkipped:
        return;
      case LoadOutcome::kFailed:
        had_error = true;
        return;
    }
    const LintReport report =
        MakeReport(spec_id, RunRules(*spec, rules, lexicon));
    found = found || !report.violations.empty();
    out << Render(report, format);
  };

  for (const std::string& arg : paths) {
    std::error_code ec;
    if (fs::is_directory(arg, ec)) {
      for (const fs::path& file : DiscoverSpecFiles(arg)) {
        lint_one(file, file.generic_string(), /*lenient=*/true);
      }
    } else {
      lint_one(arg, arg, /*lenient=*/false);
    }
  }
  return ExitStatus(found, had_error);
}

int RunAggregate(const fs::path& root, const LintConfig& cfg,
                 OutputFormat format, const WordLexicon& lexicon,
                 std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    err << root.generic_string() << ": error: not a directory\n";
    return kExitError;
  }
  std::vector<fs::path> projects;
  for (fs::directory_iterator it(root, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_directory(ec)) projects.push_back(it->path());
  }
  if (ec) {
    err << root.generic_string() << ": error: " << ec.message() << "\n";
    return kExitError;
  }
  std::sort(projects.begin(), projects.end());

  const RuleConfig rules = cfg.ToRuleConfig();
  bool had_error = false;
  std::vector<LintReport> reports;
  for (const fs::path& project : projects) {
    const std::string project_id = project.filename().string();
    std::vector<Violation> all;
    for (const fs::path& file : DiscoverSpecFiles(project)) {
      std::optional<ApiSpecification> spec;
      const LoadOutcome outcome =
          TryLoad(file, project_id, /*lenient=*/true, err, spec);
      if (outcome == LoadOutcome::kFailed) had_error = true;
      if (outcome != LoadOutcome::kLoaded) continue;
      std::vector<Violation> found = RunRules(*spec, rules, lexicon);
      all.insert(all.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
    }
    reports.push_back(MakeReport(project_id, std::move(all)));
  }

  CorpusSummary summary;
  try {
    summary = Aggregate(reports, projects.size());
  } catch (const EmptyCorpus& e) {
    err << root.generic_string() << ": error: " << e.what()
        << " (no project subdirectories)\n";
    return kExitError;
  }
  out << Render(summary, format);
  const bool found =
      std::any_of(summary.rows.begin(), summary.rows.end(),
                  [](const SummaryRow& row) { return row.occurrences > 0; });
  return ExitStatus(found, had_error);
}

int RunCli(const std::vector<std::string>& args,
           const std::optional<std::string>& env_lexicon, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"restlint: REST API design rule linter for OpenAPI documents",
               "restlint"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format_name;
  std::vector<std::string> lint_paths;
  std::string corpus_root;

  CLI::App* lint = app.add_subcommand("lint", "Lint OpenAPI/Swagger files");
  lint->add_option("--config", config_path, "JSON lint configuration");
  lint->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  lint->add_option("paths", lint_paths, "Spec files or directories")
      ->required();

  CLI::App* aggregate = app.add_subcommand(
      "aggregate", "Summarize rule violations over a corpus of projects");
  aggregate->add_option("--config", config_path, "JSON lint configuration");
  aggregate->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  aggregate->add_option("dir", corpus_root, "Corpus root directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (CLI::App* sub : app.get_subcommands()) {
      err << sub->help();
    }
    return kExitError;
  }

  try {
    const LintConfig cfg =
        LoadConfig(config_path.empty() ? std::nullopt
                                       : std::optional<fs::path>(config_path));
    OutputFormat format = cfg.output_format.value_or(OutputFormat::kText);
    if (!format_name.empty()) ParseOutputFormat(format_name, &format);
    const WordLexicon lexicon = ResolveLexicon(cfg, env_lexicon);
    if (lint->parsed()) {
      return RunLint(lint_paths, cfg, format, lexicon, out, err);
    }
    return RunAggregate(corpus_root, cfg, format, lexicon, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LexiconError& e) {
    err << "error: lexicon: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace restlint
