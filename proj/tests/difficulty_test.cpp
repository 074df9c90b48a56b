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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coursediff/catalog.hpp"
#include "coursediff/difficulty.hpp"
#include "coursediff/rounding.hpp"
#include "test_support.hpp"

namespace coursediff {
namespace {

using testing::Gen;
using testing::kPropertyCases;

Course MakeCourse(std::string code, std::vector<std::string> ids,
                  std::vector<CriterionOverride> overrides = {}) {
  return {std::move(code), "", std::move(ids), std::move(overrides)};
}

// Reference grid as printed: criteria, overrides where the printed cell
// differs from the rubric table, printed raw total, count, and DI in tenths.
struct PrintedRow {
  Course course;
  int raw_total;
  int count;
  int di_tenths;
};

std::vector<PrintedRow> PrintedGrid() {
  return {
      {MakeCourse("C1", {"a", "b", "e", "i", "k", "l"}), 96, 6, 38},
      {MakeCourse("C2", {"a", "b", "e", "i", "k", "l"}), 96, 6, 38},
      {MakeCourse("C3", {"b", "c", "i", "k", "l", "m"}), 111, 6, 44},
      {MakeCourse("C4", {"a", "b", "c", "e", "i", "l"}), 111, 6, 44},
      {MakeCourse("C5", {"a", "b", "i", "k", "l", "m"}), 96, 6, 38},
      {MakeCourse("C6", {"a", "b", "e", "i", "k", "l"}), 96, 6, 38},
      {MakeCourse("C7", {"a", "b", "e", "i", "k", "l"}), 96, 6, 38},
      {MakeCourse("C8", {"c", "e", "j", "k", "l"}, {{"j", 6}}), 75, 5, 36},
      {MakeCourse("C9", {"a", "h", "k", "l"}, {{"h", 5}}), 38, 4, 23},
      {MakeCourse("C10", {"b", "e", "h", "i", "k", "l"}, {{"h", 5}}), 95, 6, 38},
      {MakeCourse("C11", {"d", "f", "g", "j"}, {{"j", 6}}), 18, 4, 11},
  };
}

// Brute-force oracle: among candidate normalizations DI = 5 * raw / D, only
// D = 21 * count reproduces every printed DI. Checked in integers:
// round(50 * raw / D) == printed tenths  <=>  (2P - 1) D <= 100 raw < (2P + 1) D.
TEST(NormalizationOracleTest, OnlyCountTimesMaxRubricReproducesThePrintedColumn) {
  auto reproduces = [](int raw, long denom, int tenths) {
    return (2L * tenths - 1) * denom <= 100L * raw && 100L * raw < (2L * tenths + 1) * denom;
  };
  struct Candidate {
    const char* name;
    long (*denominator)(const PrintedRow&);
  };
  const Candidate candidates[] = {
      {"21*count", [](const PrintedRow& r) { return 21L * r.count; }},
      {"catalog total 157", [](const PrintedRow&) { return 157L; }},
      {"21*13", [](const PrintedRow&) { return 21L * 13; }},
      {"126", [](const PrintedRow&) { return 126L; }},
      {"20*count", [](const PrintedRow& r) { return 20L * r.count; }},
      {"6*count", [](const PrintedRow& r) { return 6L * r.count; }},
  };
  std::vector<std::string> winners;
  for (const auto& cand : candidates) {
    bool all = true;
    for (const auto& row : PrintedGrid()) {
      all = all && reproduces(row.raw_total, cand.denominator(row), row.di_tenths);
    }
    if (all) winners.emplace_back(cand.name);
  }
  EXPECT_EQ(winners, std::vector<std::string>{"21*count"});
}

TEST(CourseRawTotalTest, WorkedExampleAndSingleCriterion) {
  const auto& catalog = CanonicalCatalog();
  EXPECT_EQ(CourseRawTotal(MakeCourse("X", {"a", "h", "k", "l"}), catalog), 6 + 6 + 6 + 21);
  EXPECT_EQ(CourseRawTotal(MakeCourse("C1", {"a", "b", "e", "i", "k", "l"}), catalog), 96);
  EXPECT_EQ(CourseRawTotal(MakeCourse("J", {"j"}), catalog), 1);
}

TEST(CourseRawTotalTest, UnknownIdNamesCourseAndId) {
  try {
    CourseRawTotal(MakeCourse("C42", {"a", "z"}), CanonicalCatalog());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnresolvedCriterion);
    EXPECT_NE(std::string(e.what()).find("C42"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'z'"), std::string::npos);
  }
}

TEST(CourseValidationTest, RejectsMalformedCourses) {
  const auto& catalog = CanonicalCatalog();
  auto code_of = [&](const Course& c) {
    try {
      ValidateCourse(c, catalog);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;  // sentinel: no error
  };
  EXPECT_EQ(code_of(MakeCourse("E", {})), ErrorCode::kEmptyCriteria);
  EXPECT_EQ(code_of(MakeCourse("D", {"a", "a"})), ErrorCode::kDuplicateId);
  EXPECT_EQ(code_of(MakeCourse("O", {"a"}, {{"b", 5}})), ErrorCode::kInvalidOverride);
  EXPECT_EQ(code_of(MakeCourse("O", {"a"}, {{"a", 0}})), ErrorCode::kInvalidOverride);
  EXPECT_EQ(code_of(MakeCourse("O", {"a"}, {{"a", 22}})), ErrorCode::kInvalidOverride);
  EXPECT_EQ(code_of(MakeCourse("O", {"a"}, {{"a", 5}, {"a", 6}})), ErrorCode::kInvalidOverride);
  EXPECT_EQ(code_of(MakeCourse("OK", {"a"}, {{"a", 21}})), ErrorCode::kIo);
}

TEST(BloomDifficultyTest, PrintedGridReproducesAsPrinted) {
  for (const auto& row : PrintedGrid()) {
    const auto d = ComputeBloomDifficulty(row.course, CanonicalCatalog());
    EXPECT_EQ(d.raw_total, row.raw_total) << row.course.code;
    EXPECT_EQ(d.criteria_count, row.count) << row.course.code;
    EXPECT_EQ(d.max_total, 21 * row.count) << row.course.code;
    EXPECT_EQ(d.di_tenths, row.di_tenths) << row.course.code;
  }
}

TEST(BloomDifficultyTest, FullPrecisionValues) {
  const auto& catalog = CanonicalCatalog();
  const auto c1 = ComputeBloomDifficulty(MakeCourse("C1", {"a", "b", "e", "i", "k", "l"}), catalog);
  EXPECT_NEAR(c1.di, 96.0 / 126.0 * 5.0, 1e-12);
  EXPECT_EQ(FormatFixed(c1.di, 4), "3.8095");
  EXPECT_EQ(FormatTenths(c1.Reported()), "3.8");
  const auto c9 = ComputeBloomDifficulty(MakeCourse("C9", {"a", "h", "k", "l"}, {{"h", 5}}), catalog);
  EXPECT_EQ(c9.raw_total, 38);
  EXPECT_EQ(FormatFixed(c9.di, 4), "2.2619");
  EXPECT_EQ(FormatTenths(c9.Reported()), "2.3");
}

TEST(BloomDifficultyTest, AllFullCriteriaGiveExactlyFive) {
  const auto d = ComputeBloomDifficulty(MakeCourse("F", {"b", "c", "e", "i", "l", "m"}),
                                        CanonicalCatalog());
  EXPECT_EQ(d.raw_total, d.max_total);
  EXPECT_EQ(d.di, 5.0);
  EXPECT_EQ(d.di_tenths, 50);
}

TEST(BloomDifficultyTest, CanonicalModeDropsOverrides) {
  const auto& catalog = CanonicalCatalog();
  const auto c9 = MakeCourse("C9", {"a", "h", "k", "l"}, {{"h", 5}});
  EXPECT_EQ(CourseRawTotal(ApplyMode(c9, ComputeMode::kAsPrinted), catalog), 38);
  EXPECT_EQ(CourseRawTotal(ApplyMode(c9, ComputeMode::kCanonical), catalog), 39);
}

TEST(ClassAverageToDiTest, WorkedExampleAndEndpoints) {
  EXPECT_EQ(ClassAverageToDi(35.0), 3.25);
  EXPECT_EQ(ClassAverageToDi(100.0), 0.0);
  EXPECT_EQ(ClassAverageToDi(0.0), 5.0);
  EXPECT_FALSE(std::signbit(ClassAverageToDi(100.0)));
}

TEST(ClassAverageToDiTest, OutOfRangeIsInvalidGrade) {
  for (double bad : {-0.1, 100.5, 135.0, std::nan("")}) {
    try {
      ClassAverageToDi(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidGrade);
    }
  }
}

GradeHistory DiHistory(std::string code, std::vector<double> values) {
  GradeHistory h{std::move(code), {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    h.generations.push_back({"Generation " + std::to_string(i + 1), GradeKind::kDi, values[i]});
  }
  return h;
}

TEST(GradeDifficultyTest, MeansOfGenerations) {
  EXPECT_EQ(FormatTenths(GradeDifficulty(DiHistory("C1", {4.2, 3.4, 4.4}))), "4.0");
  const double c9 = GradeDifficulty(DiHistory("C9", {2.4, 2.6, 2.1}));
  EXPECT_NEAR(c9, 7.1 / 3.0, 1e-12);
  EXPECT_EQ(FormatTenths(c9), "2.4");
  EXPECT_EQ(GradeDifficulty(DiHistory("S", {3.7})), 3.7);
}

TEST(GradeDifficultyTest, PercentRecordsAreConvertedFirst) {
  GradeHistory h{"P", {{"2019", GradeKind::kPercent, 35.0}, {"2020", GradeKind::kDi, 3.25}}};
  EXPECT_EQ(GradeDifficulty(h), 3.25);
}

TEST(GradeDifficultyTest, ErrorCases) {
  try {
    GradeDifficulty(GradeHistory{"E", {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
  }
  try {
    GradeDifficulty(DiHistory("X", {5.5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGrade);
  }
  GradeHistory dup{"D", {{"g", GradeKind::kDi, 1.0}, {"g", GradeKind::kDi, 2.0}}};
  EXPECT_THROW(GradeDifficulty(dup), Error);
}

TEST(CombineDifficultyTest, Policies) {
  EXPECT_EQ(CombineDifficulty(3.8, 4.0).final_di, 3.8);
  EXPECT_EQ(CombineDifficulty(3.8, 4.0, CombinePolicy::kBloomPrimary).final_di, 3.8);
  EXPECT_EQ(FormatTenths(CombineDifficulty(3.8, 4.0, CombinePolicy::kMeanOfBoth).final_di), "3.9");
  EXPECT_THROW(CombineDifficulty(5.1, 4.0), Error);
}

TEST(CombineDifficultyTest, AgreementIsAFixedPoint) {
  Gen gen(11);
  for (int i = 0; i < kPropertyCases; ++i) {
    const double x = gen.Real(0.0, 5.0);
    EXPECT_EQ(CombineDifficulty(x, x, CombinePolicy::kBloomPrimary).final_di, x);
    EXPECT_EQ(CombineDifficulty(x, x, CombinePolicy::kMeanOfBoth).final_di, x);
  }
}

TEST(RoundingTest, HalfAwayFromZeroAtOneDecimal) {
  EXPECT_EQ(FormatTenths(3.25), "3.3");
  EXPECT_EQ(FormatTenths(0.05), "0.1");
  EXPECT_EQ(FormatTenths(2.35), "2.4");  // 2.35 is stored just below the tie
  EXPECT_EQ(FormatTenths(-0.25), "-0.3");
  EXPECT_EQ(FormatTenths(-0.04), "0.0");
  EXPECT_EQ(RoundRatioToTenths(96 * 5, 126), 38);
  EXPECT_EQ(RoundRatioToTenths(1, 20), 1);  // exact tie 0.05
  EXPECT_EQ(RoundRatioToTenths(-1, 20), -1);
}

// ---- properties ----------------------------------------------------------

TEST(DifficultyPropertyTest, BloomDiScaleBoundsAndNormalizationIdentity) {
  Gen gen(1);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto catalog = gen.Catalog();
    const auto course = gen.CourseOver(catalog, "P" + std::to_string(i));
    const auto d = ComputeBloomDifficulty(course, catalog);
    EXPECT_LE(d.raw_total, d.max_total);
    EXPECT_GE(d.di, 5.0 / 21.0 - 1e-12);
    EXPECT_LE(d.di, 5.0 + 1e-12);
    EXPECT_NEAR(d.di * d.max_total, 5.0 * d.raw_total, 1e-9);
    EXPECT_EQ(d.di_tenths, std::llround(RoundTenths(d.di) * 10));
  }
}

TEST(DifficultyPropertyTest, ClassAverageMapIsLinearAndStrictlyDecreasing) {
  Gen gen(2);
  for (int i = 0; i < kPropertyCases; ++i) {
    const double a = gen.Real(0.0, 100.0);
    const double b = gen.Real(0.0, 100.0);
    EXPECT_NEAR(ClassAverageToDi(a) + (a / 100.0) * 5.0, 5.0, 1e-12);
    if (a < b) {
      EXPECT_GT(ClassAverageToDi(a), ClassAverageToDi(b));
    }
    if (a > b) {
      EXPECT_LT(ClassAverageToDi(a), ClassAverageToDi(b));
    }
  }
}

TEST(DifficultyPropertyTest, AppendingACriterionMovesDiTowardItsOwnLevel) {
  Gen gen(3);
  for (int i = 0; i < kPropertyCases; ++i) {
    auto catalog = gen.Catalog();
    auto criteria = catalog.criteria();
    const LevelSet extra_levels = gen.Coin() ? LevelSet::All() : gen.NonEmptyLevels();
    criteria.push_back({"extra", "", extra_levels});
    const CriterionCatalog extended(criteria, "extended");
    auto course = gen.CourseOver(catalog, "A");
    const double before = ComputeBloomDifficulty(course, extended).di;
    course.criteria.push_back("extra");
    const double after = ComputeBloomDifficulty(course, extended).di;
    const int r = extra_levels.WeightSum();
    const double target = 5.0 * r / 21.0;
    EXPECT_LE(std::min(before, target) - 1e-12, after);
    EXPECT_LE(after, std::max(before, target) + 1e-12);
    if (r == 21 && before < 5.0) {
      EXPECT_GT(after, before);
    }
  }
}

TEST(DifficultyPropertyTest, GradeMeanIsPermutationInvariantAndBounded) {
  Gen gen(4);
  for (int i = 0; i < kPropertyCases; ++i) {
    std::vector<double> values(static_cast<std::size_t>(gen.Int(1, 8)));
    for (auto& v : values) v = gen.Tenths(0.0, 5.0);
    const double mean = GradeDifficulty(DiHistory("G", values));
    std::shuffle(values.begin(), values.end(), gen.engine());
    EXPECT_NEAR(GradeDifficulty(DiHistory("G", values)), mean, 1e-12);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    EXPECT_GE(mean, *lo - 1e-12);
    EXPECT_LE(mean, *hi + 1e-12);
  }
}

}  // namespace
}  // namespace coursediff
