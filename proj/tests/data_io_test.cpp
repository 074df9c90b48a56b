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

#include <functional>
#include <string>

#include "coursediff/csv.hpp"
#include "coursediff/data_io.hpp"
#include "coursediff/fixtures.hpp"
#include "coursediff/report.hpp"
#include "test_support.hpp"

namespace coursediff {
namespace {

using testing::Gen;
using testing::kPropertyCases;
using testing::SourceDir;

std::filesystem::path DataFile(const std::string& name) { return SourceDir() / "data" / name; }

ErrorCode CodeOf(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIo;
}

TEST(CsvTest, QuotingEmbeddedNewlinesAndCrlf) {
  const auto records = csv::Parse("a,b\r\n\"x, \"\"y\"\"\",\"two\nlines\"\r\n\r\nlast,\n", "t");
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[1].fields, (std::vector<std::string>{"x, \"y\"", "two\nlines"}));
  EXPECT_EQ(records[1].line, 2u);
  EXPECT_EQ(records[2].line, 5u);
  EXPECT_EQ(records[2].fields, (std::vector<std::string>{"last", ""}));
}

TEST(CsvTest, MalformedQuotesAreParseErrors) {
  EXPECT_EQ(CodeOf([] { csv::Parse("a\n\"open", "t"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { csv::Parse("a\n\"x\"y", "t"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { csv::Table("a,b\n1\n", "t"); }), ErrorCode::kParse);
}

TEST(CsvTest, EscapeRoundTrips) {
  Gen gen(41);
  for (int i = 0; i < kPropertyCases; ++i) {
    std::vector<std::string> fields;
    const int n = gen.Int(1, 5);
    for (int k = 0; k < n; ++k) fields.push_back(gen.Text() + (gen.Coin() ? "\n" : ""));
    const auto parsed = csv::Parse(csv::Row(fields), "t");
    const bool all_empty = std::all_of(fields.begin(), fields.end(),
                                       [](const std::string& f) { return f.empty(); });
    if (n == 1 && all_empty) continue;  // a lone empty field is a blank line
    ASSERT_EQ(parsed.size(), 1u);
    EXPECT_EQ(parsed[0].fields, fields);
  }
}

TEST(LoadCatalogTest, ShippedTableMatchesTheBuiltInCatalog) {
  const auto json = LoadCatalog(DataFile("table1.json"));
  EXPECT_EQ(json.size(), 13u);
  EXPECT_EQ(CatalogTotal(json), 157);
  EXPECT_EQ(json, CanonicalCatalog());
  const auto csv = LoadCatalog(DataFile("table1.csv"));
  EXPECT_EQ(csv.criteria(), CanonicalCatalog().criteria());
  EXPECT_EQ(csv.provenance(), "table1");
}

TEST(LoadCatalogTest, LevelOutOfRange) {
  std::string msg;
  EXPECT_EQ(CodeOf([] { ParseCatalog({"bad.csv", "id,description,levels\na,x,1|2\nb,y,1|7\n"}); },
                   &msg),
            ErrorCode::kLevelOutOfRange);
  EXPECT_NE(msg.find("bad.csv:3"), std::string::npos) << msg;
  EXPECT_EQ(CodeOf([] {
              ParseCatalog({"bad.json", R"({"criteria":[{"id":"a","levels":[1,7]}]})"});
            }),
            ErrorCode::kLevelOutOfRange);
}

TEST(LoadCatalogTest, DuplicateId) {
  std::string msg;
  EXPECT_EQ(CodeOf([] { ParseCatalog({"dup.csv", "id,description,levels\na,x,1\na,y,2\n"}); },
                   &msg),
            ErrorCode::kDuplicateId);
  EXPECT_NE(msg.find("dup.csv:3"), std::string::npos) << msg;
}

TEST(LoadCatalogTest, ParseDiagnostics) {
  std::string msg;
  EXPECT_EQ(CodeOf([] { ParseCatalog({"c.csv", "id,description\na,x\n"}); }, &msg),
            ErrorCode::kParse);
  EXPECT_NE(msg.find("levels"), std::string::npos);
  EXPECT_EQ(CodeOf([] { ParseCatalog({"c.json", "{not json"}); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCatalog({"c.csv", ""}); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { LoadCatalog("/nonexistent/catalog.csv"); }), ErrorCode::kIo);
}

TEST(LoadCurriculumTest, ShippedAsPrintedFixture) {
  const auto courses = LoadCurriculum(DataFile("table2_asprinted.csv"), CanonicalCatalog());
  ASSERT_EQ(courses.size(), 11u);
  EXPECT_EQ(courses[0].code, "C1");
  EXPECT_EQ(courses[0].criteria, (std::vector<std::string>{"a", "b", "e", "i", "k", "l"}));
  EXPECT_EQ(courses[8].overrides, (std::vector<CriterionOverride>{{"h", 5}}));
  const auto canonical = LoadCurriculum(DataFile("table2_canonical.csv"), CanonicalCatalog());
  ASSERT_EQ(canonical.size(), 11u);
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_EQ(canonical[i].criteria, courses[i].criteria);
    EXPECT_TRUE(canonical[i].overrides.empty());
  }
}

TEST(LoadCurriculumTest, WorkedExampleFixture) {
  const auto courses = LoadCurriculum(DataFile("worked_example.csv"), CanonicalCatalog());
  ASSERT_EQ(courses.size(), 1u);
  EXPECT_EQ(CourseRawTotal(courses[0], CanonicalCatalog()), 39);
}

TEST(LoadCurriculumTest, UnknownCriterionAndEmptyCriteria) {
  std::string msg;
  EXPECT_EQ(CodeOf([] {
              ParseCurriculum({"cur.csv", "course_code,title,criteria,overrides\nC1,,a|z,\n"},
                              CanonicalCatalog());
            },
                   &msg),
            ErrorCode::kUnresolvedCriterion);
  EXPECT_NE(msg.find("C1"), std::string::npos);
  EXPECT_NE(msg.find("'z'"), std::string::npos);
  EXPECT_NE(msg.find("cur.csv:2"), std::string::npos);
  EXPECT_EQ(CodeOf([] {
              ParseCurriculum({"cur.csv", "course_code,criteria\nC1,\n"}, CanonicalCatalog());
            }),
            ErrorCode::kEmptyCriteria);
  EXPECT_EQ(CodeOf([] {
              ParseCurriculum({"cur.csv", "course_code,criteria,overrides\nC1,a,a=3\n"},
                              CanonicalCatalog());
            }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              ParseCurriculum({"cur.csv", "course_code,criteria\nC1,a\nC1,b\n"},
                              CanonicalCatalog());
            }),
            ErrorCode::kDuplicateId);
}

TEST(LoadGradesTest, ShippedGradesFixture) {
  const auto book = LoadGrades(DataFile("table3_grades.csv"));
  ASSERT_EQ(book.size(), 11u);
  const auto* c1 = FindHistory(book, "C1");
  ASSERT_NE(c1, nullptr);
  ASSERT_EQ(c1->generations.size(), 3u);
  EXPECT_EQ(c1->generations[0].value, 4.2);
  EXPECT_EQ(c1->generations[1].value, 3.4);
  EXPECT_EQ(c1->generations[2].value, 4.4);
  for (const auto& g : c1->generations) {
    EXPECT_EQ(g.kind, GradeKind::kDi);
  }
  EXPECT_EQ(c1->generations[0].Di(), 4.2);  // passes through unconverted
}

TEST(LoadGradesTest, RangeAndKindErrors) {
  std::string msg;
  EXPECT_EQ(CodeOf([] {
              ParseGrades({"g.csv", "course_code,generation,kind,value\nC1,G1,percent,135\n"});
            },
                   &msg),
            ErrorCode::kInvalidGrade);
  EXPECT_NE(msg.find("g.csv:2"), std::string::npos) << msg;
  EXPECT_EQ(CodeOf([] {
              ParseGrades({"g.csv", "course_code,generation,kind,value\nC1,G1,di,5.2\n"});
            }),
            ErrorCode::kInvalidGrade);
  EXPECT_EQ(CodeOf([] {
              ParseGrades({"g.csv", "course_code,generation,kind,value\nC1,G1,,3.1\n"});
            },
                   &msg),
            ErrorCode::kParse);
  EXPECT_NE(msg.find("kind"), std::string::npos);
  EXPECT_EQ(CodeOf([] { ParseGrades({"g.csv", "course_code,generation,value\nC1,G1,3.1\n"}); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              ParseGrades({"g.csv", "course_code,generation,kind,value\nC1,G1,di,abc\n"});
            }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              ParseGrades({"g.csv", "course_code,generation,kind,value\nC1,G1,di,3\nC1,G1,di,4\n"});
            }),
            ErrorCode::kDuplicateId);
}

TEST(LoadGradesTest, PercentRecordsKeepTheirKind) {
  const auto book =
      ParseGrades({"g.json", R"({"grades":[{"course_code":"X","generation":"2019",)"
                             R"("kind":"percent","value":35}]})"});
  ASSERT_EQ(book.size(), 1u);
  EXPECT_EQ(book[0].generations[0].kind, GradeKind::kPercent);
  EXPECT_EQ(GradeDifficulty(book[0]), 3.25);
}

TEST(LoadStatementsTest, FigureOneStatements) {
  const auto statements = LoadStatements(DataFile("figure1_statements.csv"));
  ASSERT_EQ(statements.size(), 13u);
  EXPECT_EQ(statements[0].criterion_id, "a");
  EXPECT_EQ(statements[0].text, CanonicalCatalog().Find("a")->description);
  EXPECT_EQ(CodeOf([] { ParseStatements({"s.csv", "criterion_id,text\na,   \n"}); }),
            ErrorCode::kParse);
}

TEST(LoadLexiconTest, ShippedDefaultCoversEveryLevel) {
  const auto lex = LoadLexicon(DataFile("bloom_verbs_default.json"));
  for (auto level : kAllLevels) EXPECT_FALSE(lex.VerbsAt(level).empty());
  EXPECT_EQ(lex.Lookup("apply"), LevelSet{BloomLevel::kApply});
  EXPECT_EQ(CodeOf([] { ParseLexicon({"l.csv", "verb,levels\napply,3\n"}); }),
            ErrorCode::kInvalidLexicon);
}

TEST(FixturesTest, EmbeddedCopiesMatchDataDirectory) {
  for (const auto& f : kFixtures) {
    EXPECT_EQ(ReadTextFile(DataFile(std::string(f.name))), f.content)
        << f.name << " drifted; run tools/embed_fixtures.py";
  }
  EXPECT_EQ(FindFixture("table1")->name, "table1.json");
  EXPECT_EQ(FindFixture("table1.csv")->name, "table1.csv");
  EXPECT_EQ(FindFixture("nope"), nullptr);
}

TEST(BundleTest, ReportsUnmatchedGradesAndCoursesWithoutGrades) {
  BundleSources sources{
      ReadSource(DataFile("table1.json")),
      Source{"cur.csv", "course_code,criteria\nC1,a|b\nC2,j\n"},
      Source{"g.csv", "course_code,generation,kind,value\nC1,G1,di,3\nC9,G1,di,2\n"},
      std::nullopt};
  const auto bundle = LoadBundle(sources);
  EXPECT_EQ(bundle.unmatched_grade_codes, std::vector<std::string>{"C9"});
  EXPECT_EQ(bundle.courses_without_grades, std::vector<std::string>{"C2"});
  ASSERT_EQ(bundle.provenance.size(), 3u);
  EXPECT_EQ(bundle.provenance[0].sha256.size(), 64u);
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

// ---- round trips ----------------------------------------------------------

TEST(RoundTripTest, Catalogs) {
  Gen gen(42);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto catalog = gen.Catalog();
    const auto from_csv = ParseCatalog({"generated.csv", WriteCatalogCsv(catalog)});
    EXPECT_EQ(from_csv.criteria(), catalog.criteria());
    EXPECT_EQ(ParseCatalog({"x.json", WriteCatalogJson(catalog)}), catalog);
  }
}

TEST(RoundTripTest, Curricula) {
  Gen gen(43);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto catalog = gen.Catalog();
    std::vector<Course> courses;
    const int n = gen.Int(1, 6);
    for (int k = 0; k < n; ++k) courses.push_back(gen.CourseOver(catalog, "C" + std::to_string(k)));
    EXPECT_EQ(ParseCurriculum({"x.csv", WriteCurriculumCsv(courses)}, catalog), courses);
    EXPECT_EQ(ParseCurriculum({"x.json", WriteCurriculumJson(courses)}, catalog), courses);
  }
}

TEST(RoundTripTest, GradeFiles) {
  Gen gen(44);
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto book = gen.Grades();
    EXPECT_EQ(ParseGrades({"x.csv", WriteGradesCsv(book)}), book);
    EXPECT_EQ(ParseGrades({"x.json", WriteGradesJson(book)}), book);
  }
}

TEST(RoundTripTest, LexiconsAndStatements) {
  const auto lex = LoadLexicon(DataFile("bloom_verbs_default.json"));
  EXPECT_EQ(ParseLexicon({"x.csv", WriteLexiconCsv(lex)}), lex);
  EXPECT_EQ(ParseLexicon({"x.json", WriteLexiconJson(lex)}), lex);
  const auto statements = LoadStatements(DataFile("figure1_statements.csv"));
  EXPECT_EQ(ParseStatements({"x.csv", WriteStatementsCsv(statements)}), statements);
  EXPECT_EQ(WriteStatementsCsv(statements), ReadTextFile(DataFile("figure1_statements.csv")));
}

// ---- reports --------------------------------------------------------------

ValidationRun PaperRun(ComputeMode mode) {
  BundleSources sources{ReadSource(DataFile("table1.json")),
                        ReadSource(DataFile("table2_asprinted.csv")),
                        ReadSource(DataFile("table3_grades.csv")), std::nullopt};
  ValidationOptions options;
  options.mode = mode;
  return RunValidation(LoadBundle(sources), options);
}

TEST(WriteReportTest, CsvAverageRowAndLayout) {
  const auto run = PaperRun(ComputeMode::kAsPrinted);
  const auto text = RenderValidationCsv(run);
  EXPECT_EQ(text.substr(0, text.find('\n')), "course_code,actual_di,estimated_di,abs_error");
  EXPECT_NE(text.find("\nC1,4.0,3.8,0.2\n"), std::string::npos);
  EXPECT_TRUE(text.ends_with("\nAVERAGE,3.6,3.5,0.2\n")) << text;
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(WriteReportTest, WritesFilesAndSurfacesPathOnFailure) {
  const auto dir = testing::ScratchDir("write_report");
  const auto run = PaperRun(ComputeMode::kAsPrinted);
  WriteReport(run, OutputFormat::kJson, dir / "r.json");
  const auto json = Json::parse(ReadTextFile(dir / "r.json"));
  EXPECT_EQ(json["average"]["actual_di"].get<double>(), 3.6);
  EXPECT_EQ(json["accuracy"]["courses"].get<int>(), 11);
  std::string msg;
  EXPECT_EQ(CodeOf([&] { WriteReport(run, OutputFormat::kCsv, dir / "missing" / "r.csv"); }, &msg),
            ErrorCode::kIo);
  EXPECT_NE(msg.find("missing"), std::string::npos);
}

TEST(WriteReportTest, JsonKeyOrderIsStable) {
  const auto json = Json::parse(RenderValidationJson(PaperRun(ComputeMode::kAsPrinted)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : json.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"mode", "policy", "precision", "tolerance", "courses",
                                            "average", "accuracy", "excluded_courses",
                                            "unmatched_grade_codes", "sources"}));
}

TEST(WriteReportTest, IdenticalInputsGiveIdenticalBytes) {
  for (auto format : {OutputFormat::kCsv, OutputFormat::kJson, OutputFormat::kTable}) {
    EXPECT_EQ(RenderValidation(PaperRun(ComputeMode::kAsPrinted), format),
              RenderValidation(PaperRun(ComputeMode::kAsPrinted), format));
  }
}

TEST(EstimateReportTest, CsvCarriesRubricRowAndOverrides) {
  const auto courses = LoadCurriculum(DataFile("table2_asprinted.csv"), CanonicalCatalog());
  const auto text =
      RenderEstimateCsv(BuildEstimate(CanonicalCatalog(), courses, ComputeMode::kAsPrinted));
  EXPECT_NE(text.find("RUBRIC,6,21,21,6,21,3,3,6,21,1,6,21,21,157,"), std::string::npos);
  EXPECT_NE(text.find("C9,6,,,,,,,5,,,6,21,,38,4,84,2.3,2.2619,as-printed,h\n"),
            std::string::npos)
      << text;
}

}  // namespace
}  // namespace coursediff
