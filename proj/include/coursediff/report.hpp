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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coursediff/catalog.hpp"
#include "coursediff/csv.hpp"
#include "coursediff/data_io.hpp"
#include "coursediff/difficulty.hpp"
#include "coursediff/outcome_mapper.hpp"
#include "coursediff/rounding.hpp"
#include "coursediff/validation.hpp"

namespace coursediff {

enum class OutputFormat { kCsv, kJson, kTable };

inline std::optional<OutputFormat> ParseOutputFormat(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  if (text == "table") return OutputFormat::kTable;
  return std::nullopt;
}

namespace internal {

/// Left-aligned first column, right-aligned others, two-space gutters.
inline std::string RenderTextTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      const std::string pad(width[i] - r[i].size(), ' ');
      line += i == 0 ? r[i] + pad : pad + r[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::int64_t ToTenths(double value) {
  return static_cast<std::int64_t>(std::llround(RoundTenths(value) * 10.0));
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Bloom estimate, laid out like a course-by-criterion grid.

struct EstimateRow {
  std::string course_code;
  std::vector<CourseCell> cells;
  BloomDifficulty difficulty;
};

struct EstimateReport {
  ComputeMode mode = ComputeMode::kCanonical;
  std::string catalog_provenance;
  std::vector<std::string> criterion_ids;
  std::vector<int> rubrics;
  int catalog_total = 0;
  std::vector<EstimateRow> rows;
};

inline EstimateReport BuildEstimate(const CriterionCatalog& catalog,
                                    const std::vector<Course>& courses, ComputeMode mode) {
  EstimateReport report;
  report.mode = mode;
  report.catalog_provenance = catalog.provenance();
  for (const auto& c : catalog.criteria()) {
    report.criterion_ids.push_back(c.id);
    report.rubrics.push_back(CriterionRubric(c));
  }
  report.catalog_total = CatalogTotal(catalog);
  for (const auto& course : courses) {
    const Course effective = ApplyMode(course, mode);
    report.rows.push_back({course.code, CourseCells(effective, catalog),
                           ComputeBloomDifficulty(effective, catalog)});
  }
  return report;
}

namespace internal {

inline std::vector<std::string> EstimateCells(const EstimateReport& report,
                                              const EstimateRow& row) {
  std::vector<std::string> out;
  for (const auto& id : report.criterion_ids) {
    std::string cell;
    for (const auto& c : row.cells) {
      if (c.id == id) cell = std::to_string(c.points);
    }
    out.push_back(cell);
  }
  return out;
}

inline std::string OverriddenIds(const EstimateRow& row) {
  std::vector<std::string> ids;
  for (const auto& c : row.cells) {
    if (c.overridden) ids.push_back(c.id);
  }
  return Join(ids, "|");
}

}  // namespace internal

/// Columns: course_code, one per catalog criterion, raw_total,
/// criteria_count, max_total, di, di_exact, mode, overridden. The first
/// data row (RUBRIC) carries each criterion's rubric and the catalog total.
inline std::string RenderEstimateCsv(const EstimateReport& report) {
  std::vector<std::string> header = {"course_code"};
  header.insert(header.end(), report.criterion_ids.begin(), report.criterion_ids.end());
  for (const char* h : {"raw_total", "criteria_count", "max_total", "di", "di_exact", "mode",
                        "overridden"}) {
    header.emplace_back(h);
  }
  std::string out = csv::Row(header);
  std::vector<std::string> rubric = {"RUBRIC"};
  for (int r : report.rubrics) rubric.push_back(std::to_string(r));
  rubric.push_back(std::to_string(report.catalog_total));
  rubric.resize(header.size());
  out += csv::Row(rubric);
  for (const auto& row : report.rows) {
    std::vector<std::string> fields = {row.course_code};
    auto cells = internal::EstimateCells(report, row);
    fields.insert(fields.end(), cells.begin(), cells.end());
    const auto& d = row.difficulty;
    fields.push_back(std::to_string(d.raw_total));
    fields.push_back(std::to_string(d.criteria_count));
    fields.push_back(std::to_string(d.max_total));
    fields.push_back(FormatTenths(d.Reported()));
    fields.push_back(FormatFixed(d.di, 4));
    fields.emplace_back(ModeName(report.mode));
    fields.push_back(internal::OverriddenIds(row));
    out += csv::Row(fields);
  }
  return out;
}

inline std::string RenderEstimateJson(const EstimateReport& report) {
  Json doc;
  doc["mode"] = ModeName(report.mode);
  doc["catalog"] = report.catalog_provenance;
  Json rubric = Json::object();
  for (std::size_t i = 0; i < report.criterion_ids.size(); ++i) {
    rubric[report.criterion_ids[i]] = report.rubrics[i];
  }
  doc["rubric"] = std::move(rubric);
  doc["catalog_total"] = report.catalog_total;
  doc["courses"] = Json::array();
  for (const auto& row : report.rows) {
    Json item;
    item["course_code"] = row.course_code;
    Json cells = Json::object();
    for (const auto& c : row.cells) cells[c.id] = c.points;
    item["cells"] = std::move(cells);
    item["overridden"] = Json::array();
    for (const auto& c : row.cells) {
      if (c.overridden) item["overridden"].push_back(c.id);
    }
    item["raw_total"] = row.difficulty.raw_total;
    item["criteria_count"] = row.difficulty.criteria_count;
    item["max_total"] = row.difficulty.max_total;
    item["di"] = row.difficulty.Reported();
    item["di_exact"] = RoundDecimal(row.difficulty.di, 4);
    doc["courses"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline std::string RenderEstimateTable(const EstimateReport& report) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"Course"};
  header.insert(header.end(), report.criterion_ids.begin(), report.criterion_ids.end());
  for (const char* h : {"Total", "Criteria", "Count*21", "DI"}) header.emplace_back(h);
  rows.push_back(header);
  std::vector<std::string> rubric = {"Rubric"};
  for (int r : report.rubrics) rubric.push_back(std::to_string(r));
  rubric.push_back(std::to_string(report.catalog_total));
  rows.push_back(rubric);
  for (const auto& row : report.rows) {
    std::vector<std::string> r = {row.course_code};
    auto cells = internal::EstimateCells(report, row);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (const auto& c : row.cells) {
        if (c.id == report.criterion_ids[i] && c.overridden) cells[i] += "*";
      }
    }
    r.insert(r.end(), cells.begin(), cells.end());
    r.push_back(std::to_string(row.difficulty.raw_total));
    r.push_back(std::to_string(row.difficulty.criteria_count));
    r.push_back(std::to_string(row.difficulty.max_total));
    r.push_back(FormatTenths(row.difficulty.Reported()));
    rows.push_back(r);
  }
  std::string out = "mode: " + std::string(ModeName(report.mode)) +
                    "  catalog: " + report.catalog_provenance + "\n";
  out += internal::RenderTextTable(rows);
  bool any_override = false;
  for (const auto& row : report.rows) any_override = any_override || !internal::OverriddenIds(row).empty();
  if (any_override) out += "* cell taken from a course override\n";
  return out;
}

// ---------------------------------------------------------------------------
// Grade-history difficulty.

struct GradeRow {
  std::string course_code;
  std::vector<std::pair<std::string, double>> generation_di;
  double mean_di = 0.0;
};

struct GradeReport {
  std::vector<std::string> labels;  // union of generation labels, first-seen order
  std::vector<GradeRow> rows;
};

inline GradeReport BuildGradeReport(const GradeBook& book) {
  GradeReport report;
  for (const auto& h : book) {
    GradeRow row{h.course_code, {}, GradeDifficulty(h)};
    for (const auto& g : h.generations) {
      row.generation_di.emplace_back(g.label, g.Di());
      if (std::find(report.labels.begin(), report.labels.end(), g.label) ==
          report.labels.end()) {
        report.labels.push_back(g.label);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace internal {

inline std::vector<std::string> GradeFields(const GradeReport& report, const GradeRow& row) {
  std::vector<std::string> fields = {row.course_code};
  for (const auto& label : report.labels) {
    std::string v;
    for (const auto& [l, di] : row.generation_di) {
      if (l == label) v = FormatShortest(di);
    }
    fields.push_back(v);
  }
  fields.push_back(std::to_string(row.generation_di.size()));
  fields.push_back(FormatFixed(row.mean_di, 4));
  fields.push_back(FormatTenths(row.mean_di));
  return fields;
}

}  // namespace internal

/// Columns: course_code, one per generation label (DI scale), generations,
/// mean_di (4 decimals), actual_di (1 decimal).
inline std::string RenderGradesCsv(const GradeReport& report) {
  std::vector<std::string> header = {"course_code"};
  header.insert(header.end(), report.labels.begin(), report.labels.end());
  for (const char* h : {"generations", "mean_di", "actual_di"}) header.emplace_back(h);
  std::string out = csv::Row(header);
  for (const auto& row : report.rows) out += csv::Row(internal::GradeFields(report, row));
  return out;
}

inline std::string RenderGradesJson(const GradeReport& report) {
  Json doc;
  doc["courses"] = Json::array();
  for (const auto& row : report.rows) {
    Json item;
    item["course_code"] = row.course_code;
    Json gens = Json::array();
    for (const auto& [label, di] : row.generation_di) {
      Json g;
      g["generation"] = label;
      g["di"] = di;
      gens.push_back(std::move(g));
    }
    item["generations"] = std::move(gens);
    item["generation_count"] = row.generation_di.size();
    item["mean_di"] = RoundDecimal(row.mean_di, 4);
    item["actual_di"] = RoundTenths(row.mean_di);
    doc["courses"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline std::string RenderGradesTable(const GradeReport& report) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"Course"};
  header.insert(header.end(), report.labels.begin(), report.labels.end());
  for (const char* h : {"N", "Mean", "Actual DI"}) header.emplace_back(h);
  rows.push_back(header);
  for (const auto& row : report.rows) rows.push_back(internal::GradeFields(report, row));
  return internal::RenderTextTable(rows);
}

// ---------------------------------------------------------------------------
// Validation: grade-derived (actual) against Bloom-derived (estimated).

struct ValidationOptions {
  ComputeMode mode = ComputeMode::kCanonical;
  CombinePolicy policy = CombinePolicy::kBloomPrimary;
  double tolerance = 0.5;
  /// Compare unrounded values instead of the 1-decimal reported ones.
  bool full_precision = false;
};

struct ValidationRun {
  ValidationOptions options;
  ValidationReport report;
  std::vector<FinalDifficulty> finals;
  std::vector<std::string> excluded_courses;
  std::vector<std::string> unmatched_grade_codes;
  std::vector<SourceInfo> sources;
};

/// Joins curriculum and grades, compares each course with a history, and
/// summarizes. Courses without grades are excluded and listed.
inline ValidationRun RunValidation(const DataBundle& bundle, const ValidationOptions& options) {
  ValidationRun run;
  run.options = options;
  run.excluded_courses = bundle.courses_without_grades;
  run.unmatched_grade_codes = bundle.unmatched_grade_codes;
  run.sources = bundle.provenance;
  std::vector<CourseComparison> comparisons;
  for (const auto& course : bundle.courses) {
    const auto* history = FindHistory(bundle.grades, course.code);
    if (history == nullptr) continue;
    const auto bloom = ComputeBloomDifficulty(ApplyMode(course, options.mode), bundle.catalog);
    const double grade = GradeDifficulty(*history);
    CourseComparison cmp =
        options.full_precision
            ? Compare(grade, bloom.di, course.code)
            : CompareTenths(internal::ToTenths(grade), bloom.di_tenths, course.code);
    run.finals.push_back(
        CombineDifficulty(cmp.estimated_di, cmp.actual_di, options.policy, course.code));
    comparisons.push_back(std::move(cmp));
  }
  run.report = Summarize(comparisons, options.tolerance);
  return run;
}

/// Columns: course_code, actual_di, estimated_di, abs_error, then an AVERAGE
/// row. All values fixed at one decimal.
inline std::string RenderValidationCsv(const ValidationRun& run) {
  std::string out = csv::Row({"course_code", "actual_di", "estimated_di", "abs_error"});
  for (const auto& c : run.report.comparisons) {
    out += csv::Row({c.course_code, FormatTenths(c.actual_di), FormatTenths(c.estimated_di),
                     FormatTenths(c.abs_error)});
  }
  out += csv::Row({"AVERAGE", FormatTenths(run.report.mean_actual),
                   FormatTenths(run.report.mean_estimated),
                   FormatTenths(run.report.mean_abs_error)});
  return out;
}

/// Key order: mode, policy, precision, tolerance, courses, average,
/// accuracy, excluded_courses, unmatched_grade_codes, sources.
inline std::string RenderValidationJson(const ValidationRun& run) {
  const auto& r = run.report;
  Json doc;
  doc["mode"] = ModeName(run.options.mode);
  doc["policy"] = PolicyName(run.options.policy);
  doc["precision"] = run.options.full_precision ? "full" : "rounded";
  doc["tolerance"] = r.tolerance;
  doc["courses"] = Json::array();
  for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
    const auto& c = r.comparisons[i];
    Json item;
    item["course_code"] = c.course_code;
    item["actual_di"] = RoundTenths(c.actual_di);
    item["estimated_di"] = RoundTenths(c.estimated_di);
    item["abs_error"] = RoundTenths(c.abs_error);
    item["squared_error"] = RoundDecimal(c.squared_error, 4);
    item["final_di"] = RoundTenths(run.finals[i].final_di);
    item["within_tolerance"] = WithinTolerance(c.abs_error, r.tolerance);
    doc["courses"].push_back(std::move(item));
  }
  Json avg;
  avg["actual_di"] = RoundTenths(r.mean_actual);
  avg["estimated_di"] = RoundTenths(r.mean_estimated);
  avg["abs_error"] = RoundTenths(r.mean_abs_error);
  avg["squared_error"] = RoundDecimal(r.mean_squared_error, 4);
  doc["average"] = std::move(avg);
  Json acc;
  acc["within_tolerance"] = r.within_tolerance;
  acc["courses"] = r.comparisons.size();
  acc["ratio"] = RoundDecimal(r.accuracy, 4);
  doc["accuracy"] = std::move(acc);
  doc["excluded_courses"] = run.excluded_courses;
  doc["unmatched_grade_codes"] = run.unmatched_grade_codes;
  doc["sources"] = Json::array();
  for (const auto& s : run.sources) {
    Json src;
    src["name"] = s.name;
    src["sha256"] = s.sha256;
    doc["sources"].push_back(std::move(src));
  }
  return doc.dump(2) + "\n";
}

inline std::string RenderValidationTable(const ValidationRun& run) {
  const auto& r = run.report;
  std::vector<std::vector<std::string>> rows = {
      {"Course", "Actual DI", "Estimated DI", "abs_error (paper 'MSE')", "sq_error", "Final DI"}};
  for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
    const auto& c = r.comparisons[i];
    rows.push_back({c.course_code, FormatTenths(c.actual_di), FormatTenths(c.estimated_di),
                    FormatTenths(c.abs_error), FormatFixed(c.squared_error, 4),
                    FormatTenths(run.finals[i].final_di)});
  }
  rows.push_back({"Average", FormatTenths(r.mean_actual), FormatTenths(r.mean_estimated),
                  FormatTenths(r.mean_abs_error), FormatFixed(r.mean_squared_error, 4), ""});
  std::string out = "mode: " + std::string(ModeName(run.options.mode)) +
                    "  policy: " + std::string(PolicyName(run.options.policy)) +
                    "  precision: " + (run.options.full_precision ? "full" : "rounded") + "\n";
  out += internal::RenderTextTable(rows);
  out += "accuracy: " + std::to_string(r.within_tolerance) + "/" +
         std::to_string(r.comparisons.size()) + " = " + FormatFixed(r.accuracy, 4) +
         " at tolerance " + FormatShortest(r.tolerance) + "\n";
  return out;
}

inline std::string RenderValidation(const ValidationRun& run, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv: return RenderValidationCsv(run);
    case OutputFormat::kJson: return RenderValidationJson(run);
    case OutputFormat::kTable: return RenderValidationTable(run);
  }
  return {};
}

/// Writes a rendered validation report; I/O failures name the path.
inline void WriteReport(const ValidationRun& run, OutputFormat format,
                        const std::filesystem::path& path) {
  WriteTextFile(path, RenderValidation(run, format));
}

/// Actual and estimated series per course, one decimal.
inline std::string RenderPlotCsv(const ValidationRun& run) {
  std::string out = csv::Row({"course_code", "actual_di", "estimated_di"});
  for (const auto& c : run.report.comparisons) {
    out += csv::Row({c.course_code, FormatTenths(c.actual_di), FormatTenths(c.estimated_di)});
  }
  return out;
}

/// Static two-series line chart of the plot data.
inline std::string RenderPlotSvg(const ValidationRun& run) {
  const auto& cs = run.report.comparisons;
  constexpr int kWidth = 640, kHeight = 360, kLeft = 50, kRight = 20, kTop = 30, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t n = cs.size();
  auto x = [&](std::size_t i) {
    return kLeft + (n > 1 ? plot_w * static_cast<double>(i) / static_cast<double>(n - 1)
                          : plot_w / 2.0);
  };
  auto y = [&](double di) { return kTop + plot_h * (1.0 - di / kDiScale); };
  auto num = [](double v) { return FormatFixed(v, 1); };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
                    "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    svg += "<line x1=\"" + std::to_string(kLeft) + "\" x2=\"" +
           std::to_string(kWidth - kRight) + "\" y1=\"" + num(y(tick)) + "\" y2=\"" +
           num(y(tick)) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + std::to_string(kLeft - 8) + "\" y=\"" + num(y(tick) + 4) +
           "\" text-anchor=\"end\">" + std::to_string(tick) + "</text>\n";
  }
  auto series = [&](bool actual, const char* color) {
    std::string pts;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = actual ? cs[i].actual_di : cs[i].estimated_di;
      if (i) pts += " ";
      pts += num(x(i)) + "," + num(y(v));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  };
  series(true, "#1f77b4");
  series(false, "#d62728");
  for (std::size_t i = 0; i < n; ++i) {
    svg += "<text x=\"" + num(x(i)) + "\" y=\"" + std::to_string(kHeight - kBottom + 16) +
           "\" text-anchor=\"middle\">" + cs[i].course_code + "</text>\n";
  }
  svg += "<text x=\"" + std::to_string(kLeft) + "\" y=\"18\" fill=\"#1f77b4\">Actual DI</text>\n";
  svg += "<text x=\"" + std::to_string(kLeft + 90) +
         "\" y=\"18\" fill=\"#d62728\">Estimated DI</text>\n";
  svg += "</svg>\n";
  return svg;
}

// ---------------------------------------------------------------------------
// Outcome mapping.

struct MappingRow {
  MappingResult result;
  std::optional<int> draft_rubric;  // empty when the statement needs review
};

inline std::vector<MappingRow> BuildMappingReport(
    const std::vector<OutcomeStatement>& statements, const BloomLexicon& lexicon,
    const MapOptions& options) {
  std::vector<MappingRow> rows;
  for (const auto& s : statements) {
    MappingRow row{MapOutcome(s, lexicon, options), std::nullopt};
    if (!row.result.NeedsReview()) {
      row.draft_rubric = CriterionRubric(SuggestCriterion(s, lexicon, options));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace internal {

inline std::vector<std::string> MappingFields(const MappingRow& row) {
  const auto& r = row.result;
  std::vector<std::string> matched;
  for (const auto& m : r.matched) matched.push_back(m.verb + ":" + std::to_string(Weight(m.level)));
  return {r.criterion_id,
          r.NeedsReview() ? "needs-review" : "ok",
          FormatLevelSet(r.levels),
          row.draft_rubric ? std::to_string(*row.draft_rubric) : "",
          Join(matched, "|"),
          Join(r.ambiguous_verbs, "|"),
          std::to_string(r.unmatched_tokens_count)};
}

}  // namespace internal

/// Columns: criterion_id, status (ok|needs-review), levels, draft_rubric,
/// matched (verb:level pairs), ambiguous, unmatched_tokens.
inline std::string RenderMappingCsv(const std::vector<MappingRow>& rows) {
  std::string out = csv::Row({"criterion_id", "status", "levels", "draft_rubric", "matched",
                              "ambiguous", "unmatched_tokens"});
  for (const auto& row : rows) out += csv::Row(internal::MappingFields(row));
  return out;
}

inline std::string RenderMappingJson(const std::vector<MappingRow>& rows) {
  Json doc;
  doc["results"] = Json::array();
  for (const auto& row : rows) {
    const auto& r = row.result;
    Json item;
    item["criterion_id"] = r.criterion_id;
    item["status"] = r.NeedsReview() ? "needs-review" : "ok";
    item["levels"] = internal::LevelsToJson(r.levels);
    item["draft_rubric"] = row.draft_rubric ? Json(*row.draft_rubric) : Json(nullptr);
    item["matched"] = Json::array();
    for (const auto& m : r.matched) {
      Json mj;
      mj["verb"] = m.verb;
      mj["token"] = m.token;
      mj["level"] = Weight(m.level);
      mj["ambiguous"] = m.ambiguous;
      item["matched"].push_back(std::move(mj));
    }
    item["ambiguous_verbs"] = r.ambiguous_verbs;
    item["unmatched_tokens"] = r.unmatched_tokens_count;
    doc["results"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline std::string RenderMappingTable(const std::vector<MappingRow>& rows) {
  std::vector<std::vector<std::string>> table = {
      {"Criterion", "Status", "Levels", "Rubric", "Matched", "Ambiguous", "Unmatched"}};
  for (const auto& row : rows) table.push_back(internal::MappingFields(row));
  return internal::RenderTextTable(table);
}

}  // namespace coursediff
