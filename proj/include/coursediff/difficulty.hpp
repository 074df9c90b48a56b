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
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coursediff/catalog.hpp"
#include "coursediff/error.hpp"
#include "coursediff/rounding.hpp"

namespace coursediff {

/// Upper end of every difficulty index scale.
inline constexpr double kDiScale = 5.0;

/// How per-course cells are computed. kCanonical ignores course overrides and
/// takes every cell from the catalog; kAsPrinted applies overrides.
enum class ComputeMode { kCanonical, kAsPrinted };

inline std::string_view ModeName(ComputeMode mode) {
  return mode == ComputeMode::kCanonical ? "canonical" : "as-printed";
}

inline std::optional<ComputeMode> ParseMode(std::string_view text) {
  if (text == "canonical") return ComputeMode::kCanonical;
  if (text == "as-printed" || text == "asprinted") return ComputeMode::kAsPrinted;
  return std::nullopt;
}

struct CriterionOverride {
  std::string id;
  int points = 0;

  friend bool operator==(const CriterionOverride&, const CriterionOverride&) = default;
};

struct Course {
  std::string code;
  std::string title;
  std::vector<std::string> criteria;
  std::vector<CriterionOverride> overrides;

  const CriterionOverride* FindOverride(std::string_view id) const {
    for (const auto& o : overrides) {
      if (o.id == id) return &o;
    }
    return nullptr;
  }

  friend bool operator==(const Course&, const Course&) = default;
};

/// Checks the course invariants against a catalog: non-empty unique
/// criteria that all resolve, and overrides keyed by mapped criteria with
/// points in [1, 21].
inline void ValidateCourse(const Course& course, const CriterionCatalog& catalog) {
  if (course.criteria.empty()) {
    throw Error(ErrorCode::kEmptyCriteria, "course " + course.code + " maps no criteria");
  }
  for (std::size_t i = 0; i < course.criteria.size(); ++i) {
    const auto& id = course.criteria[i];
    if (catalog.Find(id) == nullptr) {
      throw Error(ErrorCode::kUnresolvedCriterion,
                  "course " + course.code + ": criterion '" + id +
                      "' is not in catalog '" + catalog.provenance() + "'");
    }
    if (std::find(course.criteria.begin(), course.criteria.begin() + i, id) !=
        course.criteria.begin() + i) {
      throw Error(ErrorCode::kDuplicateId,
                  "course " + course.code + ": criterion '" + id + "' listed twice");
    }
  }
  for (std::size_t i = 0; i < course.overrides.size(); ++i) {
    const auto& o = course.overrides[i];
    if (std::find(course.criteria.begin(), course.criteria.end(), o.id) ==
        course.criteria.end()) {
      throw Error(ErrorCode::kInvalidOverride,
                  "course " + course.code + ": override for unmapped criterion '" + o.id + "'");
    }
    if (o.points < 1 || o.points > kMaxRubric) {
      throw Error(ErrorCode::kInvalidOverride,
                  "course " + course.code + ": override " + o.id + ":" +
                      std::to_string(o.points) + " is outside 1..21");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (course.overrides[j].id == o.id) {
        throw Error(ErrorCode::kInvalidOverride,
                    "course " + course.code + ": criterion '" + o.id + "' overridden twice");
      }
    }
  }
}

/// The course with its overrides dropped, as evaluated in canonical mode.
inline Course ApplyMode(Course course, ComputeMode mode) {
  if (mode == ComputeMode::kCanonical) course.overrides.clear();
  return course;
}

/// Points one mapped criterion contributes to a course.
struct CourseCell {
  std::string id;
  int points = 0;
  bool overridden = false;
};

inline std::vector<CourseCell> CourseCells(const Course& course,
                                           const CriterionCatalog& catalog) {
  ValidateCourse(course, catalog);
  std::vector<CourseCell> cells;
  cells.reserve(course.criteria.size());
  for (const auto& id : course.criteria) {
    if (const auto* o = course.FindOverride(id)) {
      cells.push_back({id, o->points, true});
    } else {
      cells.push_back({id, CriterionRubric(*catalog.Find(id)), false});
    }
  }
  return cells;
}

/// Sum over mapped criteria of the override if present, else the rubric.
inline int CourseRawTotal(const Course& course, const CriterionCatalog& catalog) {
  int total = 0;
  for (const auto& cell : CourseCells(course, catalog)) total += cell.points;
  return total;
}

struct BloomDifficulty {
  int raw_total = 0;
  int criteria_count = 0;
  int max_total = 0;
  /// 5 * raw_total / max_total at full precision.
  double di = 0.0;
  /// di rounded half away from zero to tenths, computed exactly.
  std::int64_t di_tenths = 0;

  double Reported() const { return static_cast<double>(di_tenths) / 10.0; }
};

inline BloomDifficulty ComputeBloomDifficulty(const Course& course,
                                              const CriterionCatalog& catalog) {
  BloomDifficulty out;
  out.raw_total = CourseRawTotal(course, catalog);
  out.criteria_count = static_cast<int>(course.criteria.size());
  out.max_total = out.criteria_count * kMaxRubric;
  out.di = kDiScale * out.raw_total / out.max_total;
  out.di_tenths = RoundRatioToTenths(5 * static_cast<std::int64_t>(out.raw_total),
                                     out.max_total);
  return out;
}

/// 5 - (average / 100) * 5, evaluated as (100 - average) * 5 / 100 so that
/// integral averages give exact results.
inline double ClassAverageToDi(double average) {
  if (!(average >= 0.0 && average <= 100.0)) {
    throw Error(ErrorCode::kInvalidGrade,
                "class average " + FormatShortest(average) + " is outside [0, 100]");
  }
  const double di = (100.0 - average) * kDiScale / 100.0;
  return di == 0.0 ? 0.0 : di;
}

enum class GradeKind { kPercent, kDi };

inline std::string_view KindName(GradeKind kind) {
  return kind == GradeKind::kPercent ? "percent" : "di";
}

inline std::optional<GradeKind> ParseKind(std::string_view text) {
  if (text == "percent") return GradeKind::kPercent;
  if (text == "di") return GradeKind::kDi;
  return std::nullopt;
}

/// One cohort's performance in a course: a class average in percent or a
/// value already on the 0-5 difficulty scale.
struct GenerationRecord {
  std::string label;
  GradeKind kind = GradeKind::kDi;
  double value = 0.0;

  void Validate() const {
    const double hi = kind == GradeKind::kPercent ? 100.0 : kDiScale;
    if (!(value >= 0.0 && value <= hi)) {
      throw Error(ErrorCode::kInvalidGrade,
                  "generation '" + label + "': " + std::string(KindName(kind)) +
                      " value " + FormatShortest(value) + " is outside [0, " +
                      FormatShortest(hi) + "]");
    }
  }

  /// Value on the difficulty scale.
  double Di() const {
    Validate();
    return kind == GradeKind::kPercent ? ClassAverageToDi(value) : value;
  }

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct GradeHistory {
  std::string course_code;
  std::vector<GenerationRecord> generations;

  void Validate() const {
    if (generations.empty()) {
      throw Error(ErrorCode::kInsufficientData,
                  "course " + course_code + " has no generations");
    }
    for (std::size_t i = 0; i < generations.size(); ++i) {
      generations[i].Validate();
      for (std::size_t j = 0; j < i; ++j) {
        if (generations[j].label == generations[i].label) {
          throw Error(ErrorCode::kDuplicateId, "course " + course_code + ": generation '" +
                                                   generations[i].label + "' repeated");
        }
      }
    }
  }

  friend bool operator==(const GradeHistory&, const GradeHistory&) = default;
};

/// Mean of the per-generation difficulty values, at full precision.
inline double GradeDifficulty(const GradeHistory& history) {
  history.Validate();
  double sum = 0.0;
  for (const auto& g : history.generations) sum += g.Di();
  return sum / static_cast<double>(history.generations.size());
}

enum class CombinePolicy { kBloomPrimary, kMeanOfBoth };

inline std::string_view PolicyName(CombinePolicy policy) {
  return policy == CombinePolicy::kBloomPrimary ? "bloom_primary" : "mean_of_both";
}

inline std::optional<CombinePolicy> ParsePolicy(std::string_view text) {
  if (text == "bloom_primary" || text == "bloom-primary") return CombinePolicy::kBloomPrimary;
  if (text == "mean_of_both" || text == "mean-of-both") return CombinePolicy::kMeanOfBoth;
  return std::nullopt;
}

struct FinalDifficulty {
  std::string course_code;
  double bloom_di = 0.0;
  double grade_di = 0.0;
  double final_di = 0.0;
  CombinePolicy policy = CombinePolicy::kBloomPrimary;
};

inline FinalDifficulty CombineDifficulty(double bloom_di, double grade_di,
                                         CombinePolicy policy = CombinePolicy::kBloomPrimary,
                                         std::string course_code = {}) {
  for (double v : {bloom_di, grade_di}) {
    if (!(v >= 0.0 && v <= kDiScale)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "difficulty " + FormatShortest(v) + " is outside [0, 5]");
    }
  }
  FinalDifficulty out{std::move(course_code), bloom_di, grade_di, bloom_di, policy};
  if (policy == CombinePolicy::kMeanOfBoth) out.final_di = (bloom_di + grade_di) / 2.0;
  return out;
}

}  // namespace coursediff
