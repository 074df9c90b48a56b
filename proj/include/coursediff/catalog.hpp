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
#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coursediff/bloom.hpp"
#include "coursediff/error.hpp"

namespace coursediff {

/// Rubric points of a criterion mapped to every level: 1+2+3+4+5+6.
inline constexpr int kMaxRubric = 21;

constexpr int MaxRubric() { return kMaxRubric; }

/// One student outcome and the Bloom levels it is mapped to.
struct AbetCriterion {
  std::string id;
  std::string description;
  LevelSet levels;

  friend bool operator==(const AbetCriterion&, const AbetCriterion&) = default;
};

/// Sum of the weights of the mapped levels, in [1, 21].
inline int CriterionRubric(const AbetCriterion& criterion) {
  if (criterion.levels.Empty()) {
    throw Error(ErrorCode::kInvalidCriterion,
                "criterion '" + criterion.id + "' has no Bloom levels");
  }
  return criterion.levels.WeightSum();
}

/// Ids are single tokens: non-empty, no whitespace and none of the
/// separators used by the file formats (',', '|', ':', ';').
inline bool IsValidCriterionId(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '|' ||
           c == ':' || c == ';' || c == '"';
  });
}

/// An ordered, id-unique collection of criteria. Immutable once built.
class CriterionCatalog {
 public:
  CriterionCatalog() = default;

  /// Validates every criterion (token id, non-empty levels) and id
  /// uniqueness; throws on the first violation.
  CriterionCatalog(std::vector<AbetCriterion> criteria, std::string provenance)
      : criteria_(std::move(criteria)), provenance_(std::move(provenance)) {
    for (std::size_t i = 0; i < criteria_.size(); ++i) {
      const auto& c = criteria_[i];
      if (!IsValidCriterionId(c.id)) {
        throw Error(ErrorCode::kInvalidCriterion,
                    "criterion id '" + c.id + "' is not a single token");
      }
      if (c.levels.Empty()) {
        throw Error(ErrorCode::kInvalidCriterion,
                    "criterion '" + c.id + "' has no Bloom levels");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (criteria_[j].id == c.id) {
          throw Error(ErrorCode::kDuplicateId,
                      "criterion id '" + c.id + "' appears more than once");
        }
      }
    }
  }

  const std::vector<AbetCriterion>& criteria() const { return criteria_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t size() const { return criteria_.size(); }
  bool empty() const { return criteria_.empty(); }

  const AbetCriterion* Find(std::string_view id) const {
    for (const auto& c : criteria_) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  friend bool operator==(const CriterionCatalog&, const CriterionCatalog&) = default;

 private:
  std::vector<AbetCriterion> criteria_;
  std::string provenance_;
};

inline int CatalogTotal(const CriterionCatalog& catalog) {
  return std::accumulate(
      catalog.criteria().begin(), catalog.criteria().end(), 0,
      [](int sum, const AbetCriterion& c) { return sum + CriterionRubric(c); });
}

inline constexpr std::string_view kCanonicalProvenance = "table1-canonical";

/// Outcomes a..m with the level sets used throughout the reference
/// curriculum. Rubrics: 6,21,21,6,21,3,3,6,21,1,6,21,21 (total 157).
inline const CriterionCatalog& CanonicalCatalog() {
  static const CriterionCatalog kCatalog = [] {
    const auto to3 = LevelSet::UpTo(BloomLevel::kApply);
    const auto to2 = LevelSet::UpTo(BloomLevel::kUnderstand);
    const auto all = LevelSet::All();
    const auto only1 = LevelSet{BloomLevel::kRemember};
    std::vector<AbetCriterion> c = {
        {"a", "an ability to apply knowledge of mathematics, science, and engineering", to3},
        {"b", "an ability to design and conduct experiments, as well as to analyze and "
              "interpret data", all},
        {"c", "an ability to design a system, component, or process to meet desired needs "
              "within realistic constraints such as economic, environmental, social, "
              "political, ethical, health and safety, manufacturability, and sustainability",
         all},
        {"d", "an ability to function on multidisciplinary teams", to3},
        {"e", "an ability to identify, formulate, and solve engineering problems", all},
        {"f", "an understanding of professional and ethical responsibility", to2},
        {"g", "an ability to communicate effectively", to2},
        {"h", "the broad education necessary to understand the impact of engineering "
              "solutions in a global, economic, environmental, and societal context", to3},
        {"i", "a recognition of the need for, and an ability to engage in life-long learning",
         all},
        {"j", "a knowledge of contemporary issues", only1},
        {"k", "an ability to use the techniques, skills, and modern engineering tools "
              "necessary for engineering practice.", to3},
        {"l", "An ability to apply mathematical foundations, algorithmic principles and "
              "computer science theory in modeling and design of computer-based systems (CBC)",
         all},
        {"m", "An ability to apply design and development principles in the construction of "
              "software systems (CS)", all},
    };
    return CriterionCatalog(std::move(c), std::string(kCanonicalProvenance));
  }();
  return kCatalog;
}

}  // namespace coursediff
