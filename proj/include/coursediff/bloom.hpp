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
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coursediff/error.hpp"

namespace coursediff {

/// Cognitive categories of the revised Bloom hierarchy. The underlying value
/// is the complexity weight used as rubric points.
enum class BloomLevel : int {
  kRemember = 1,
  kUnderstand = 2,
  kApply = 3,
  kAnalyze = 4,
  kEvaluate = 5,
  kCreate = 6,
};

inline constexpr std::array<BloomLevel, 6> kAllLevels = {
    BloomLevel::kRemember, BloomLevel::kUnderstand, BloomLevel::kApply,
    BloomLevel::kAnalyze,  BloomLevel::kEvaluate,   BloomLevel::kCreate,
};

constexpr int Weight(BloomLevel level) { return static_cast<int>(level); }

inline std::string_view LevelName(BloomLevel level) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "Remember", "Understand", "Apply", "Analyze", "Evaluate", "Create"};
  return kNames[Weight(level) - 1];
}

/// Affective and psychomotor labels at the same complexity rank. They are
/// descriptive only and take no part in any computation. Rank 6 has no
/// affective or psychomotor counterpart and yields an empty string.
inline std::string_view AffectiveLabel(BloomLevel level) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "Receiving",  "Responding",
      "Valuing",    "Organizing",
      "Characterizing by value or value concept", ""};
  return kNames[Weight(level) - 1];
}

inline std::string_view PsychomotorLabel(BloomLevel level) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "Imitation", "Manipulation", "Precision", "Articulation",
      "Naturalization", ""};
  return kNames[Weight(level) - 1];
}

inline std::optional<BloomLevel> LevelFromWeight(int weight) {
  if (weight < 1 || weight > 6) return std::nullopt;
  return static_cast<BloomLevel>(weight);
}

/// Accepts a weight ("1".."6") or a level name, case-insensitively. Classic
/// Bloom names are treated as labels for the revised levels, so "synthesis"
/// is Create and "evaluation" is Evaluate.
inline std::optional<BloomLevel> ParseLevel(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (key.empty()) return std::nullopt;
  if (std::all_of(key.begin(), key.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (key.size() > 2) return std::nullopt;
    return LevelFromWeight(std::stoi(key));
  }
  struct Alias {
    std::string_view name;
    BloomLevel level;
  };
  static constexpr Alias kAliases[] = {
      {"remember", BloomLevel::kRemember},     {"remembering", BloomLevel::kRemember},
      {"knowledge", BloomLevel::kRemember},    {"understand", BloomLevel::kUnderstand},
      {"understanding", BloomLevel::kUnderstand},
      {"comprehension", BloomLevel::kUnderstand},
      {"apply", BloomLevel::kApply},           {"applying", BloomLevel::kApply},
      {"application", BloomLevel::kApply},     {"analyze", BloomLevel::kAnalyze},
      {"analyse", BloomLevel::kAnalyze},       {"analyzing", BloomLevel::kAnalyze},
      {"analysis", BloomLevel::kAnalyze},      {"evaluate", BloomLevel::kEvaluate},
      {"evaluating", BloomLevel::kEvaluate},   {"evaluation", BloomLevel::kEvaluate},
      {"create", BloomLevel::kCreate},         {"creating", BloomLevel::kCreate},
      {"synthesis", BloomLevel::kCreate},
  };
  for (const auto& alias : kAliases) {
    if (alias.name == key) return alias.level;
  }
  return std::nullopt;
}

/// A subset of the six cognitive levels. Iteration is in weight order.
class LevelSet {
 public:
  constexpr LevelSet() = default;
  LevelSet(std::initializer_list<BloomLevel> levels) {
    for (auto l : levels) Insert(l);
  }

  /// All levels with weight 1..top.
  static LevelSet UpTo(BloomLevel top) {
    LevelSet set;
    for (auto l : kAllLevels) {
      if (Weight(l) <= Weight(top)) set.Insert(l);
    }
    return set;
  }
  static LevelSet All() { return UpTo(BloomLevel::kCreate); }
  static constexpr LevelSet FromMask(std::uint8_t mask) {
    LevelSet set;
    set.mask_ = mask & 0x3F;
    return set;
  }

  void Insert(BloomLevel level) { mask_ |= Bit(level); }
  void Merge(LevelSet other) { mask_ |= other.mask_; }
  bool Contains(BloomLevel level) const { return (mask_ & Bit(level)) != 0; }
  bool IsSubsetOf(LevelSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool Empty() const { return mask_ == 0; }
  int Size() const {
    int n = 0;
    for (auto l : kAllLevels) n += Contains(l) ? 1 : 0;
    return n;
  }
  std::uint8_t Mask() const { return mask_; }

  std::vector<BloomLevel> Levels() const {
    std::vector<BloomLevel> out;
    for (auto l : kAllLevels) {
      if (Contains(l)) out.push_back(l);
    }
    return out;
  }

  /// Sum of weights of the member levels.
  int WeightSum() const {
    int sum = 0;
    for (auto l : kAllLevels) {
      if (Contains(l)) sum += Weight(l);
    }
    return sum;
  }

  friend bool operator==(LevelSet, LevelSet) = default;

 private:
  static constexpr std::uint8_t Bit(BloomLevel level) {
    return static_cast<std::uint8_t>(1u << (Weight(level) - 1));
  }
  std::uint8_t mask_ = 0;
};

/// Parses "1|2|3", "1,2,3" or "Remember|Apply" into a level set. Throws
/// kLevelOutOfRange on numeric weights outside 1..6 and kParse on anything
/// else that is not a level.
inline LevelSet ParseLevelSet(std::string_view text) {
  LevelSet set;
  std::string item;
  auto flush = [&]() {
    std::string trimmed;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    item.clear();
    if (trimmed.empty()) return;
    if (auto level = ParseLevel(trimmed)) {
      set.Insert(*level);
      return;
    }
    bool numeric = std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
    });
    if (numeric) {
      throw Error(ErrorCode::kLevelOutOfRange,
                  "level " + trimmed + " is outside 1..6");
    }
    throw Error(ErrorCode::kParse, "unrecognized Bloom level '" + trimmed + "'");
  };
  for (char c : text) {
    if (c == '|' || c == ',' || c == ';') {
      flush();
    } else {
      item.push_back(c);
    }
  }
  flush();
  return set;
}

/// "1|2|3" form used by the CSV writers.
inline std::string FormatLevelSet(LevelSet set) {
  std::string out;
  for (auto l : set.Levels()) {
    if (!out.empty()) out.push_back('|');
    out += std::to_string(Weight(l));
  }
  return out;
}

}  // namespace coursediff
