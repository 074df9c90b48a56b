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

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coursediff/bloom.hpp"
#include "coursediff/catalog.hpp"
#include "coursediff/error.hpp"
#include "coursediff/lexicon.hpp"

namespace coursediff {

/// Lowercase runs of ASCII letters, in text order. Everything else is a
/// boundary.
inline std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc < 0x80 && std::isalpha(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

struct OutcomeStatement {
  std::string criterion_id;
  std::string text;

  friend bool operator==(const OutcomeStatement&, const OutcomeStatement&) = default;
};

struct MapOptions {
  /// Also try plural and gerund forms ("solves", "identifies", "designing")
  /// against their base verb when the token itself is not listed.
  bool suffix_rule = false;
};

struct VerbMatch {
  std::string verb;    // lexicon form
  BloomLevel level;
  std::string token;   // form found in the text
  bool ambiguous = false;  // verb is listed at more than one level
};

struct MappingResult {
  std::string criterion_id;
  /// One entry per distinct (verb, level), in order of first occurrence.
  std::vector<VerbMatch> matched;
  LevelSet levels;
  int unmatched_tokens_count = 0;
  /// Verbs that contributed several levels, in order of first occurrence.
  std::vector<std::string> ambiguous_verbs;

  bool NeedsReview() const { return levels.Empty(); }
};

namespace internal {

inline bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

/// Base-form candidates for the optional suffix rule, most specific first.
inline std::vector<std::string> SuffixCandidates(std::string_view token) {
  std::vector<std::string> out;
  std::string t(token);
  if (EndsWith(t, "ies")) out.push_back(t.substr(0, t.size() - 3) + "y");
  if (EndsWith(t, "es")) out.push_back(t.substr(0, t.size() - 2));
  if (EndsWith(t, "s") && !EndsWith(t, "ss")) out.push_back(t.substr(0, t.size() - 1));
  if (EndsWith(t, "ing") && t.size() > 4) {
    std::string stem = t.substr(0, t.size() - 3);
    out.push_back(stem);
    out.push_back(stem + "e");
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      out.push_back(stem.substr(0, stem.size() - 1));
    }
  }
  return out;
}

}  // namespace internal

/// Tags a statement with every Bloom level whose verbs occur in its text.
/// Verbs listed at several levels contribute all of them and are reported
/// as ambiguous.
inline MappingResult MapOutcome(const OutcomeStatement& statement,
                                const BloomLexicon& lexicon, const MapOptions& options = {}) {
  MappingResult result;
  result.criterion_id = statement.criterion_id;
  for (const auto& token : Tokenize(statement.text)) {
    std::optional<std::pair<std::string, LevelSet>> hit;
    if (auto levels = lexicon.Lookup(token)) {
      hit.emplace(token, *levels);
    } else if (options.suffix_rule) {
      for (auto& candidate : internal::SuffixCandidates(token)) {
        if (auto levels = lexicon.Lookup(candidate)) {
          hit.emplace(std::move(candidate), *levels);
          break;
        }
      }
    }
    if (!hit) {
      ++result.unmatched_tokens_count;
      continue;
    }
    const auto& [verb, levels] = *hit;
    const bool ambiguous = levels.Size() > 1;
    for (auto level : levels.Levels()) {
      bool seen = false;
      for (const auto& m : result.matched) {
        if (m.verb == verb && m.level == level) seen = true;
      }
      if (!seen) result.matched.push_back({verb, level, token, ambiguous});
    }
    if (ambiguous) {
      bool seen = false;
      for (const auto& v : result.ambiguous_verbs) seen = seen || v == verb;
      if (!seen) result.ambiguous_verbs.push_back(verb);
    }
    result.levels.Merge(levels);
  }
  return result;
}

/// Draft criterion for human review. Never inserted into a catalog here.
inline AbetCriterion SuggestCriterion(const OutcomeStatement& statement,
                                      const BloomLexicon& lexicon,
                                      const MapOptions& options = {}) {
  auto mapping = MapOutcome(statement, lexicon, options);
  if (mapping.levels.Empty()) {
    throw Error(ErrorCode::kNoActionWords,
                "statement '" + statement.criterion_id +
                    "' contains no lexicon action words; classify it manually");
  }
  return {statement.criterion_id, statement.text, mapping.levels};
}

}  // namespace coursediff
