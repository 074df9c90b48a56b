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

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "coursediff/bloom.hpp"
#include "coursediff/catalog.hpp"
#include "coursediff/csv.hpp"
#include "coursediff/difficulty.hpp"
#include "coursediff/error.hpp"
#include "coursediff/lexicon.hpp"
#include "coursediff/outcome_mapper.hpp"
#include "coursediff/rounding.hpp"
#include "json.hpp"

namespace coursediff {

using Json = nlohmann::ordered_json;

/// Text of an input together with the name used in diagnostics. The name's
/// extension selects the format: ".json" is JSON, anything else CSV.
struct Source {
  std::string name;
  std::string content;
};

enum class FileFormat { kCsv, kJson };

inline FileFormat FormatOf(std::string_view name) {
  const auto ext = std::filesystem::path(std::string(name)).extension().string();
  return ext == ".json" ? FileFormat::kJson : FileFormat::kCsv;
}

inline std::string ReadTextFile(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIo, path.string() + ": no such file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, path.string() + ": read failed");
  return ss.str();
}

inline void WriteTextFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, path.string() + ": cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, path.string() + ": write failed");
}

inline Source ReadSource(const std::filesystem::path& path) {
  return {path.string(), ReadTextFile(path)};
}

inline std::string Sha256Hex(std::string_view content) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(content.data(), content.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

namespace internal {

inline std::string Stem(std::string_view name) {
  return std::filesystem::path(std::string(name)).stem().string();
}

inline std::vector<std::string> SplitList(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == sep) {
      out.push_back(csv::Table::Trim(item));
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  out.push_back(csv::Table::Trim(item));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

inline std::optional<double> ParseDouble(std::string_view text) {
  std::string t = csv::Table::Trim(text);
  if (t.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

inline std::optional<int> ParseInt(std::string_view text) {
  std::string t = csv::Table::Trim(text);
  if (t.empty()) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

inline std::string StripCode(const Error& e) {
  std::string what = e.what();
  const std::string prefix = std::string(CodeName(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

/// Re-throws an Error with a record locator prepended, keeping its code.
template <typename Fn>
auto WithLocator(const std::string& locator, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), locator + ": " + StripCode(e));
  }
}

inline Json ParseJson(const Source& source) {
  try {
    return Json::parse(source.content);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, source.name + ": byte " + std::to_string(e.byte) +
                                       ": invalid JSON: " + e.what());
  }
}

inline const Json& RequireArray(const Json& doc, const Source& source, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw Error(ErrorCode::kParse,
                source.name + ": expected an object with array '" + key + "'");
  }
  return doc.at(key);
}

inline std::string RequireString(const Json& item, const std::string& where, const char* key,
                                 bool required = true) {
  if (!item.is_object()) throw Error(ErrorCode::kParse, where + ": expected an object");
  if (!item.contains(key)) {
    if (!required) return {};
    throw Error(ErrorCode::kParse, where + ": missing field '" + key + "'");
  }
  if (!item.at(key).is_string()) {
    throw Error(ErrorCode::kParse, where + "." + key + ": expected a string");
  }
  return item.at(key).get<std::string>();
}

inline LevelSet LevelsFromJson(const Json& value, const std::string& where) {
  if (value.is_string()) return ParseLevelSet(value.get<std::string>());
  if (!value.is_array()) {
    throw Error(ErrorCode::kParse, where + ": expected an array of levels");
  }
  LevelSet set;
  for (const auto& item : value) {
    if (item.is_number_integer()) {
      auto level = LevelFromWeight(item.get<int>());
      if (!level) {
        throw Error(ErrorCode::kLevelOutOfRange,
                    where + ": level " + item.dump() + " is outside 1..6");
      }
      set.Insert(*level);
    } else if (item.is_string()) {
      set.Merge(WithLocator(where, [&] { return ParseLevelSet(item.get<std::string>()); }));
    } else {
      throw Error(ErrorCode::kParse, where + ": level " + item.dump() + " is not a level");
    }
  }
  return set;
}

inline Json LevelsToJson(LevelSet set) {
  Json arr = Json::array();
  for (auto l : set.Levels()) arr.push_back(Weight(l));
  return arr;
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Criterion catalogs.
//   CSV:  id,description,levels     levels like "1|2|3" or "Remember|Apply"
//   JSON: {"provenance": s, "criteria": [{"id", "description", "levels": [1,2,3]}]}

inline CriterionCatalog ParseCatalog(const Source& source) {
  std::vector<AbetCriterion> criteria;
  std::vector<std::string> locators;
  std::string provenance = internal::Stem(source.name);
  if (FormatOf(source.name) == FileFormat::kJson) {
    const Json doc = internal::ParseJson(source);
    const Json& arr = internal::RequireArray(doc, source, "criteria");
    if (doc.contains("provenance") && doc.at("provenance").is_string()) {
      provenance = doc.at("provenance").get<std::string>();
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = source.name + ": criteria[" + std::to_string(i) + "]";
      AbetCriterion c;
      c.id = internal::RequireString(arr[i], where, "id");
      c.description = internal::RequireString(arr[i], where, "description", false);
      if (!arr[i].contains("levels")) {
        throw Error(ErrorCode::kParse, where + ": missing field 'levels'");
      }
      c.levels = internal::LevelsFromJson(arr[i].at("levels"), where + ".levels");
      criteria.push_back(std::move(c));
      locators.push_back(where);
    }
  } else {
    csv::Table table(source.content, source.name);
    const auto id_col = table.RequireColumn("id");
    const auto levels_col = table.RequireColumn("levels");
    const auto desc_col = table.Column("description");
    for (const auto& row : table.rows()) {
      AbetCriterion c;
      c.id = csv::Table::Trim(row.fields[id_col]);
      if (desc_col) c.description = row.fields[*desc_col];
      c.levels = internal::WithLocator(table.Locator(row, "levels"), [&] {
        return ParseLevelSet(row.fields[levels_col]);
      });
      criteria.push_back(std::move(c));
      locators.push_back(table.Locator(row));
    }
  }
  if (criteria.empty()) {
    throw Error(ErrorCode::kInvalidCriterion, source.name + ": catalog has no criteria");
  }
  // Per-record checks first so diagnostics name the offending record.
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    internal::WithLocator(locators[i], [&] {
      CriterionCatalog single({criteria[i]}, provenance);
      for (std::size_t j = 0; j < i; ++j) {
        if (criteria[j].id == criteria[i].id) {
          throw Error(ErrorCode::kDuplicateId, "criterion id '" + criteria[i].id +
                                                   "' already defined at " + locators[j]);
        }
      }
      return 0;
    });
  }
  return CriterionCatalog(std::move(criteria), std::move(provenance));
}

inline CriterionCatalog LoadCatalog(const std::filesystem::path& path) {
  return ParseCatalog(ReadSource(path));
}

inline std::string WriteCatalogCsv(const CriterionCatalog& catalog) {
  std::string out = csv::Row({"id", "description", "levels"});
  for (const auto& c : catalog.criteria()) {
    out += csv::Row({c.id, c.description, FormatLevelSet(c.levels)});
  }
  return out;
}

inline std::string WriteCatalogJson(const CriterionCatalog& catalog) {
  Json doc;
  doc["provenance"] = catalog.provenance();
  doc["criteria"] = Json::array();
  for (const auto& c : catalog.criteria()) {
    Json item;
    item["id"] = c.id;
    item["description"] = c.description;
    item["levels"] = internal::LevelsToJson(c.levels);
    doc["criteria"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Lexicons.
//   CSV:  verb,levels               one record per verb; repeated verbs merge
//   JSON: {"verbs": [{"verb", "levels": [..]}]}

inline BloomLexicon ParseLexicon(const Source& source) {
  std::vector<BloomLexicon::Entry> entries;
  if (FormatOf(source.name) == FileFormat::kJson) {
    const Json doc = internal::ParseJson(source);
    const Json& arr = internal::RequireArray(doc, source, "verbs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = source.name + ": verbs[" + std::to_string(i) + "]";
      std::string verb = internal::RequireString(arr[i], where, "verb");
      if (!arr[i].contains("levels")) {
        throw Error(ErrorCode::kParse, where + ": missing field 'levels'");
      }
      auto levels = internal::LevelsFromJson(arr[i].at("levels"), where + ".levels");
      if (NormalizeVerb(verb).empty()) {
        throw Error(ErrorCode::kInvalidLexicon, where + ": blank verb");
      }
      if (levels.Empty()) {
        throw Error(ErrorCode::kInvalidLexicon, where + ": verb '" + verb + "' has no level");
      }
      entries.emplace_back(std::move(verb), levels);
    }
  } else {
    csv::Table table(source.content, source.name);
    const auto verb_col = table.RequireColumn("verb");
    const auto levels_col = table.RequireColumn("levels");
    for (const auto& row : table.rows()) {
      const std::string verb = NormalizeVerb(row.fields[verb_col]);
      if (verb.empty()) {
        throw Error(ErrorCode::kInvalidLexicon, table.Locator(row, "verb") + ": blank verb");
      }
      auto levels = internal::WithLocator(table.Locator(row, "levels"), [&] {
        return ParseLevelSet(row.fields[levels_col]);
      });
      if (levels.Empty()) {
        throw Error(ErrorCode::kInvalidLexicon,
                    table.Locator(row, "levels") + ": verb '" + verb + "' has no level");
      }
      entries.emplace_back(verb, levels);
    }
  }
  return internal::WithLocator(source.name, [&] { return BloomLexicon(entries); });
}

inline BloomLexicon LoadLexicon(const std::filesystem::path& path) {
  return ParseLexicon(ReadSource(path));
}

inline std::string WriteLexiconCsv(const BloomLexicon& lexicon) {
  std::string out = csv::Row({"verb", "levels"});
  for (const auto& [verb, levels] : lexicon.entries()) {
    out += csv::Row({verb, FormatLevelSet(levels)});
  }
  return out;
}

inline std::string WriteLexiconJson(const BloomLexicon& lexicon) {
  Json doc;
  doc["verbs"] = Json::array();
  for (const auto& [verb, levels] : lexicon.entries()) {
    Json item;
    item["verb"] = verb;
    item["levels"] = internal::LevelsToJson(levels);
    doc["verbs"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Curricula.
//   CSV:  course_code,title,criteria,overrides
//         criteria "a|b|e", overrides "h:5|j:6" (title and overrides optional)
//   JSON: {"courses": [{"course_code", "title", "criteria": [..], "overrides": {"h": 5}}]}

namespace internal {

inline std::vector<CriterionOverride> ParseOverrides(std::string_view text) {
  std::vector<CriterionOverride> out;
  for (const auto& item : SplitList(text, '|')) {
    const auto colon = item.find(':');
    if (item.empty() || colon == std::string::npos) {
      throw Error(ErrorCode::kParse, "override '" + item + "' is not of the form id:points");
    }
    auto points = ParseInt(item.substr(colon + 1));
    if (!points) {
      throw Error(ErrorCode::kParse, "override '" + item + "' has non-integer points");
    }
    out.push_back({csv::Table::Trim(item.substr(0, colon)), *points});
  }
  return out;
}

}  // namespace internal

/// Courses in file order, each validated against the catalog.
inline std::vector<Course> ParseCurriculum(const Source& source,
                                           const CriterionCatalog& catalog) {
  std::vector<Course> courses;
  std::vector<std::string> locators;
  if (FormatOf(source.name) == FileFormat::kJson) {
    const Json doc = internal::ParseJson(source);
    const Json& arr = internal::RequireArray(doc, source, "courses");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = source.name + ": courses[" + std::to_string(i) + "]";
      Course course;
      course.code = internal::RequireString(arr[i], where, "course_code");
      course.title = internal::RequireString(arr[i], where, "title", false);
      if (!arr[i].contains("criteria") || !arr[i].at("criteria").is_array()) {
        throw Error(ErrorCode::kParse, where + ": missing array 'criteria'");
      }
      for (const auto& id : arr[i].at("criteria")) {
        if (!id.is_string()) throw Error(ErrorCode::kParse, where + ".criteria: expected strings");
        course.criteria.push_back(id.get<std::string>());
      }
      if (arr[i].contains("overrides")) {
        const auto& ov = arr[i].at("overrides");
        if (!ov.is_object()) throw Error(ErrorCode::kParse, where + ".overrides: expected an object");
        for (const auto& [id, points] : ov.items()) {
          if (!points.is_number_integer()) {
            throw Error(ErrorCode::kParse, where + ".overrides." + id + ": expected an integer");
          }
          course.overrides.push_back({id, points.get<int>()});
        }
      }
      courses.push_back(std::move(course));
      locators.push_back(where);
    }
  } else {
    csv::Table table(source.content, source.name);
    const auto code_col = table.RequireColumn("course_code");
    const auto criteria_col = table.RequireColumn("criteria");
    const auto title_col = table.Column("title");
    const auto overrides_col = table.Column("overrides");
    for (const auto& row : table.rows()) {
      Course course;
      course.code = csv::Table::Trim(row.fields[code_col]);
      if (title_col) course.title = row.fields[*title_col];
      course.criteria = internal::SplitList(row.fields[criteria_col], '|');
      if (overrides_col) {
        course.overrides = internal::WithLocator(table.Locator(row, "overrides"), [&] {
          return internal::ParseOverrides(row.fields[*overrides_col]);
        });
      }
      courses.push_back(std::move(course));
      locators.push_back(table.Locator(row));
    }
  }
  for (std::size_t i = 0; i < courses.size(); ++i) {
    internal::WithLocator(locators[i], [&] {
      if (courses[i].code.empty()) {
        throw Error(ErrorCode::kParse, "missing course_code");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (courses[j].code == courses[i].code) {
          throw Error(ErrorCode::kDuplicateId, "course " + courses[i].code + " already defined");
        }
      }
      ValidateCourse(courses[i], catalog);
      return 0;
    });
  }
  return courses;
}

inline std::vector<Course> LoadCurriculum(const std::filesystem::path& path,
                                          const CriterionCatalog& catalog) {
  return ParseCurriculum(ReadSource(path), catalog);
}

inline std::string WriteCurriculumCsv(const std::vector<Course>& courses) {
  std::string out = csv::Row({"course_code", "title", "criteria", "overrides"});
  for (const auto& c : courses) {
    std::string criteria, overrides;
    for (const auto& id : c.criteria) criteria += (criteria.empty() ? "" : "|") + id;
    for (const auto& o : c.overrides) {
      overrides += (overrides.empty() ? "" : "|") + o.id + ":" + std::to_string(o.points);
    }
    out += csv::Row({c.code, c.title, criteria, overrides});
  }
  return out;
}

inline std::string WriteCurriculumJson(const std::vector<Course>& courses) {
  Json doc;
  doc["courses"] = Json::array();
  for (const auto& c : courses) {
    Json item;
    item["course_code"] = c.code;
    item["title"] = c.title;
    item["criteria"] = c.criteria;
    if (!c.overrides.empty()) {
      Json ov = Json::object();
      for (const auto& o : c.overrides) ov[o.id] = o.points;
      item["overrides"] = std::move(ov);
    }
    doc["courses"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Grade histories.
//   CSV:  course_code,generation,kind,value      kind is "percent" or "di"
//   JSON: {"grades": [{"course_code", "generation", "kind", "value"}]}

/// Histories in order of each course's first record; generations keep file
/// order.
using GradeBook = std::vector<GradeHistory>;

inline const GradeHistory* FindHistory(const GradeBook& book, std::string_view code) {
  for (const auto& h : book) {
    if (h.course_code == code) return &h;
  }
  return nullptr;
}

namespace internal {

inline void AddRecord(GradeBook& book, std::string code, GenerationRecord record) {
  for (auto& h : book) {
    if (h.course_code == code) {
      h.generations.push_back(std::move(record));
      return;
    }
  }
  book.push_back({std::move(code), {std::move(record)}});
}

inline GenerationRecord MakeRecord(const std::string& where, std::string label,
                                   std::string_view kind_text, double value) {
  if (csv::Table::Trim(kind_text).empty()) {
    throw Error(ErrorCode::kParse, where + ": missing kind tag (percent|di)");
  }
  auto kind = ParseKind(csv::Table::Trim(kind_text));
  if (!kind) {
    throw Error(ErrorCode::kParse,
                where + ": kind '" + std::string(kind_text) + "' is not percent|di");
  }
  GenerationRecord record{std::move(label), *kind, value};
  WithLocator(where, [&] {
    record.Validate();
    return 0;
  });
  return record;
}

}  // namespace internal

inline GradeBook ParseGrades(const Source& source) {
  GradeBook book;
  if (FormatOf(source.name) == FileFormat::kJson) {
    const Json doc = internal::ParseJson(source);
    const Json& arr = internal::RequireArray(doc, source, "grades");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = source.name + ": grades[" + std::to_string(i) + "]";
      std::string code = internal::RequireString(arr[i], where, "course_code");
      std::string label = internal::RequireString(arr[i], where, "generation");
      std::string kind = internal::RequireString(arr[i], where, "kind", false);
      if (!arr[i].contains("value") || !arr[i].at("value").is_number()) {
        throw Error(ErrorCode::kParse, where + ": missing numeric 'value'");
      }
      internal::AddRecord(book, std::move(code),
                          internal::MakeRecord(where, std::move(label), kind,
                                               arr[i].at("value").get<double>()));
    }
  } else {
    csv::Table table(source.content, source.name);
    const auto code_col = table.RequireColumn("course_code");
    const auto gen_col = table.RequireColumn("generation");
    const auto kind_col = table.RequireColumn("kind");
    const auto value_col = table.RequireColumn("value");
    for (const auto& row : table.rows()) {
      auto value = internal::ParseDouble(row.fields[value_col]);
      if (!value) {
        throw Error(ErrorCode::kParse, table.Locator(row, "value") + ": '" +
                                           row.fields[value_col] + "' is not a number");
      }
      std::string code = csv::Table::Trim(row.fields[code_col]);
      if (code.empty()) {
        throw Error(ErrorCode::kParse, table.Locator(row, "course_code") + ": empty");
      }
      internal::AddRecord(book, std::move(code),
                          internal::MakeRecord(table.Locator(row),
                                               csv::Table::Trim(row.fields[gen_col]),
                                               row.fields[kind_col], *value));
    }
  }
  for (const auto& h : book) {
    internal::WithLocator(source.name, [&] {
      h.Validate();
      return 0;
    });
  }
  return book;
}

inline GradeBook LoadGrades(const std::filesystem::path& path) {
  return ParseGrades(ReadSource(path));
}

inline std::string WriteGradesCsv(const GradeBook& book) {
  std::string out = csv::Row({"course_code", "generation", "kind", "value"});
  for (const auto& h : book) {
    for (const auto& g : h.generations) {
      out += csv::Row({h.course_code, g.label, std::string(KindName(g.kind)),
                       FormatShortest(g.value)});
    }
  }
  return out;
}

inline std::string WriteGradesJson(const GradeBook& book) {
  Json doc;
  doc["grades"] = Json::array();
  for (const auto& h : book) {
    for (const auto& g : h.generations) {
      Json item;
      item["course_code"] = h.course_code;
      item["generation"] = g.label;
      item["kind"] = KindName(g.kind);
      item["value"] = g.value;
      doc["grades"].push_back(std::move(item));
    }
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Outcome statements.
//   CSV:  criterion_id,text
//   JSON: {"statements": [{"criterion_id", "text"}]}

inline std::vector<OutcomeStatement> ParseStatements(const Source& source) {
  std::vector<OutcomeStatement> out;
  auto check = [](const std::string& where, const OutcomeStatement& s) {
    if (csv::Table::Trim(s.criterion_id).empty()) {
      throw Error(ErrorCode::kParse, where + ": empty criterion_id");
    }
    bool blank = true;
    for (char c : s.text) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank) throw Error(ErrorCode::kParse, where + ": empty statement text");
  };
  if (FormatOf(source.name) == FileFormat::kJson) {
    const Json doc = internal::ParseJson(source);
    const Json& arr = internal::RequireArray(doc, source, "statements");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = source.name + ": statements[" + std::to_string(i) + "]";
      OutcomeStatement s{internal::RequireString(arr[i], where, "criterion_id"),
                         internal::RequireString(arr[i], where, "text")};
      check(where, s);
      out.push_back(std::move(s));
    }
  } else {
    csv::Table table(source.content, source.name);
    const auto id_col = table.RequireColumn("criterion_id");
    const auto text_col = table.RequireColumn("text");
    for (const auto& row : table.rows()) {
      OutcomeStatement s{csv::Table::Trim(row.fields[id_col]), row.fields[text_col]};
      check(table.Locator(row), s);
      out.push_back(std::move(s));
    }
  }
  return out;
}

inline std::vector<OutcomeStatement> LoadStatements(const std::filesystem::path& path) {
  return ParseStatements(ReadSource(path));
}

inline std::string WriteStatementsCsv(const std::vector<OutcomeStatement>& statements) {
  std::string out = csv::Row({"criterion_id", "text"});
  for (const auto& s : statements) out += csv::Row({s.criterion_id, s.text});
  return out;
}

// ---------------------------------------------------------------------------
// Bundles.

struct SourceInfo {
  std::string name;
  std::string sha256;
};

/// Everything one pipeline run reads, validated as a whole.
struct DataBundle {
  CriterionCatalog catalog;
  std::optional<BloomLexicon> lexicon;
  std::vector<Course> courses;
  GradeBook grades;
  std::vector<SourceInfo> provenance;
  /// Grade histories whose course is not in the curriculum.
  std::vector<std::string> unmatched_grade_codes;
  /// Curriculum courses with no grade history.
  std::vector<std::string> courses_without_grades;
};

struct BundleSources {
  Source catalog;
  std::optional<Source> curriculum;
  std::optional<Source> grades;
  std::optional<Source> lexicon;
};

inline DataBundle LoadBundle(const BundleSources& sources) {
  DataBundle bundle;
  auto note = [&](const Source& s) {
    bundle.provenance.push_back({s.name, Sha256Hex(s.content)});
  };
  bundle.catalog = ParseCatalog(sources.catalog);
  note(sources.catalog);
  if (sources.curriculum) {
    bundle.courses = ParseCurriculum(*sources.curriculum, bundle.catalog);
    note(*sources.curriculum);
  }
  if (sources.grades) {
    bundle.grades = ParseGrades(*sources.grades);
    note(*sources.grades);
  }
  if (sources.lexicon) {
    bundle.lexicon = ParseLexicon(*sources.lexicon);
    note(*sources.lexicon);
  }
  if (sources.grades) {
    for (const auto& h : bundle.grades) {
      bool known = false;
      for (const auto& c : bundle.courses) known = known || c.code == h.course_code;
      if (!known) bundle.unmatched_grade_codes.push_back(h.course_code);
    }
    for (const auto& c : bundle.courses) {
      if (FindHistory(bundle.grades, c.code) == nullptr) {
        bundle.courses_without_grades.push_back(c.code);
      }
    }
  }
  return bundle;
}

}  // namespace coursediff
