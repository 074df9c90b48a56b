// Copyright 2026 The coursediff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coursediff/data_io.hpp"
#include "coursediff/fixtures.hpp"
#include "coursediff/report.hpp"

namespace coursediff::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string catalog = "table1";
  std::string curriculum;
  std::string grades;
  std::string lexicon = "bloom_verbs_default";
  std::string statements;
  std::string mode = "canonical";
  std::string policy = "bloom_primary";
  double tolerance = 0.5;
  std::string format = "csv";
  std::string output;
  std::string plot;
  std::string chart;
  std::string emit_catalog;
  std::string fixtures_dir;
  bool full_precision = false;
  bool strict = false;
  bool suffix_rule = false;
};

/// A path on disk, or else the name of a shipped fixture.
Source ResolveSource(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) return ReadSource(arg);
  if (const auto* fixture = FindFixture(arg)) {
    return {"<builtin>/" + std::string(fixture->name), std::string(fixture->content)};
  }
  throw Error(ErrorCode::kIo, arg + ": no such file or shipped fixture");
}

OutputFormat FormatFlag(const RunConfig& cfg) { return *ParseOutputFormat(cfg.format); }

void Emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
  } else {
    WriteTextFile(cfg.output, text);
  }
}

int CmdEstimate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto catalog = ParseCatalog(ResolveSource(cfg.catalog));
  const auto courses = ParseCurriculum(ResolveSource(cfg.curriculum), catalog);
  const auto report = BuildEstimate(catalog, courses, *ParseMode(cfg.mode));
  switch (FormatFlag(cfg)) {
    case OutputFormat::kCsv: Emit(cfg, RenderEstimateCsv(report), out); break;
    case OutputFormat::kJson: Emit(cfg, RenderEstimateJson(report), out); break;
    case OutputFormat::kTable: Emit(cfg, RenderEstimateTable(report), out); break;
  }
  return kExitOk;
}

int CmdGrades(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto report = BuildGradeReport(ParseGrades(ResolveSource(cfg.grades)));
  switch (FormatFlag(cfg)) {
    case OutputFormat::kCsv: Emit(cfg, RenderGradesCsv(report), out); break;
    case OutputFormat::kJson: Emit(cfg, RenderGradesJson(report), out); break;
    case OutputFormat::kTable: Emit(cfg, RenderGradesTable(report), out); break;
  }
  return kExitOk;
}

int CmdValidate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  BundleSources sources{ResolveSource(cfg.catalog), ResolveSource(cfg.curriculum),
                        ResolveSource(cfg.grades), std::nullopt};
  const auto bundle = LoadBundle(sources);
  for (const auto& code : bundle.unmatched_grade_codes) {
    err << "warning: grades for " << code << " match no curriculum course; ignored\n";
  }
  for (const auto& code : bundle.courses_without_grades) {
    err << "warning: course " << code << " has no grades; excluded from means\n";
  }
  if (cfg.strict && !bundle.courses_without_grades.empty()) {
    err << "error: --strict and " << bundle.courses_without_grades.size()
        << " course(s) lack grades\n";
    return kExitDomain;
  }
  ValidationOptions options;
  options.mode = *ParseMode(cfg.mode);
  options.policy = *ParsePolicy(cfg.policy);
  options.tolerance = cfg.tolerance;
  options.full_precision = cfg.full_precision;
  const auto run = RunValidation(bundle, options);
  const auto text = RenderValidation(run, FormatFlag(cfg));
  if (!cfg.plot.empty()) WriteTextFile(cfg.plot, RenderPlotCsv(run));
  if (!cfg.chart.empty()) WriteTextFile(cfg.chart, RenderPlotSvg(run));
  Emit(cfg, text, out);
  return kExitOk;
}

int CmdMapOutcomes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto lexicon = ParseLexicon(ResolveSource(cfg.lexicon));
  const auto statements = ParseStatements(ResolveSource(cfg.statements));
  MapOptions options;
  options.suffix_rule = cfg.suffix_rule;
  const auto rows = BuildMappingReport(statements, lexicon, options);
  std::string text;
  switch (FormatFlag(cfg)) {
    case OutputFormat::kCsv: text = RenderMappingCsv(rows); break;
    case OutputFormat::kJson: text = RenderMappingJson(rows); break;
    case OutputFormat::kTable: text = RenderMappingTable(rows); break;
  }
  if (!cfg.emit_catalog.empty()) {
    // Explicit acceptance: only reviewed-ready drafts go into the file.
    std::vector<AbetCriterion> drafts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].result.NeedsReview()) {
        err << "warning: " << statements[i].criterion_id
            << " needs review; left out of the draft catalog\n";
        continue;
      }
      drafts.push_back(SuggestCriterion(statements[i], lexicon, options));
    }
    if (drafts.empty()) {
      throw Error(ErrorCode::kNoActionWords, "no statement produced a draft criterion");
    }
    CriterionCatalog catalog(std::move(drafts), "draft-from-outcomes");
    WriteTextFile(cfg.emit_catalog, FormatOf(cfg.emit_catalog) == FileFormat::kJson
                                        ? WriteCatalogJson(catalog)
                                        : WriteCatalogCsv(catalog));
  }
  Emit(cfg, text, out);
  return kExitOk;
}

int CmdFixtures(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.fixtures_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, cfg.fixtures_dir + ": " + ec.message());
  std::string written;
  for (const auto& f : kFixtures) {
    const auto path = std::filesystem::path(cfg.fixtures_dir) / std::string(f.name);
    WriteTextFile(path, f.content);
    written += path.string() + "\n";
  }
  out << written;
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Course difficulty from Bloom/ABET outcome mapping and grade history",
               "coursediff"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto formats = CLI::IsMember({"csv", "json", "table"});
  const auto modes = CLI::IsMember({"canonical", "as-printed"});
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: csv, json or table")
        ->check(formats)
        ->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
  };

  auto* estimate = app.add_subcommand("estimate", "Bloom/ABET difficulty index per course");
  estimate->add_option("--catalog", cfg.catalog, "Criterion catalog file or fixture name")
      ->capture_default_str();
  estimate->add_option("--curriculum", cfg.curriculum, "Curriculum file or fixture name")
      ->required();
  estimate->add_option("--mode", cfg.mode, "canonical or as-printed")
      ->check(modes)
      ->capture_default_str();
  add_output(estimate);

  auto* grades = app.add_subcommand("grades", "Grade-history difficulty index per course");
  grades->add_option("--grades", cfg.grades, "Grades file or fixture name")->required();
  add_output(grades);

  auto* validate = app.add_subcommand("validate", "Compare grade and Bloom difficulty");
  validate->add_option("--catalog", cfg.catalog, "Criterion catalog file or fixture name")
      ->capture_default_str();
  validate->add_option("--curriculum", cfg.curriculum, "Curriculum file or fixture name")
      ->required();
  validate->add_option("--grades", cfg.grades, "Grades file or fixture name")->required();
  validate->add_option("--mode", cfg.mode, "canonical or as-printed")
      ->check(modes)
      ->capture_default_str();
  validate->add_option("--policy", cfg.policy, "bloom_primary or mean_of_both")
      ->check(CLI::IsMember({"bloom_primary", "mean_of_both"}))
      ->capture_default_str();
  validate->add_option("--tolerance", cfg.tolerance, "Error counted as correct up to this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate->add_flag("--full-precision", cfg.full_precision,
                     "Compare unrounded values instead of 1-decimal ones");
  validate->add_flag("--strict", cfg.strict, "Fail when a course has no grades");
  validate->add_option("--plot", cfg.plot, "Write course_code,actual_di,estimated_di CSV");
  validate->add_option("--chart", cfg.chart, "Write an SVG line chart of the plot data");
  add_output(validate);

  auto* map = app.add_subcommand("map-outcomes", "Tag outcome statements with Bloom levels");
  map->add_option("--lexicon", cfg.lexicon, "Verb lexicon file or fixture name")
      ->capture_default_str();
  map->add_option("--statements", cfg.statements, "Statements file or fixture name")
      ->required();
  map->add_flag("--suffix-rule", cfg.suffix_rule, "Match plural and gerund forms");
  map->add_option("--emit-catalog", cfg.emit_catalog,
                  "Accept the drafts: write them as a catalog file (.json or .csv)");
  add_output(map);

  auto* fixtures = app.add_subcommand("fixtures", "Write the shipped fixtures to a directory");
  fixtures->add_option("--out", cfg.fixtures_dir, "Target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (estimate->parsed()) return CmdEstimate(cfg, out, err);
    if (grades->parsed()) return CmdGrades(cfg, out, err);
    if (validate->parsed()) return CmdValidate(cfg, out, err);
    if (map->parsed()) return CmdMapOutcomes(cfg, out, err);
    if (fixtures->parsed()) return CmdFixtures(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.category()) {
      case ErrorCategory::kParse:
      case ErrorCategory::kIo:
        return kExitInput;
      default:
        return kExitDomain;
    }
  }
  return kExitInput;
}

}  // namespace coursediff::cli
