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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coursediff/bloom.hpp"
#include "coursediff/error.hpp"

namespace coursediff {

/// Lowercases and strips surrounding whitespace.
inline std::string NormalizeVerb(std::string_view verb) {
  std::size_t begin = 0;
  std::size_t end = verb.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(verb[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(verb[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(verb[i]))));
  }
  return out;
}

/// Action verbs per Bloom level. A verb may be listed under several levels;
/// repeated entries for the same verb are merged.
class BloomLexicon {
 public:
  using Entry = std::pair<std::string, LevelSet>;

  BloomLexicon() = default;

  /// Throws kInvalidLexicon when a verb is blank, an entry has no level, or
  /// some level ends up without any verb.
  explicit BloomLexicon(const std::vector<Entry>& entries) {
    for (const auto& [raw, levels] : entries) {
      std::string verb = NormalizeVerb(raw);
      if (verb.empty()) throw Error(ErrorCode::kInvalidLexicon, "blank verb");
      if (levels.Empty()) {
        throw Error(ErrorCode::kInvalidLexicon, "verb '" + verb + "' has no level");
      }
      verbs_[verb].Merge(levels);
    }
    for (auto level : kAllLevels) {
      if (VerbsAt(level).empty()) {
        throw Error(ErrorCode::kInvalidLexicon,
                    "no verb listed for level " + std::string(LevelName(level)));
      }
    }
  }

  /// Levels for an already-normalized verb, or nullopt.
  std::optional<LevelSet> Lookup(std::string_view verb) const {
    auto it = verbs_.find(std::string(verb));
    if (it == verbs_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> VerbsAt(BloomLevel level) const {
    std::vector<std::string> out;
    for (const auto& [verb, levels] : verbs_) {
      if (levels.Contains(level)) out.push_back(verb);
    }
    return out;
  }

  /// Entries sorted by verb.
  std::vector<Entry> entries() const { return {verbs_.begin(), verbs_.end()}; }
  std::size_t size() const { return verbs_.size(); }

  friend bool operator==(const BloomLexicon&, const BloomLexicon&) = default;

 private:
  std::map<std::string, LevelSet> verbs_;
};

}  // namespace coursediff
