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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coursediff/error.hpp"

namespace coursediff::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields with "" escapes, embedded newlines in
/// quotes, LF or CRLF endings, optional UTF-8 BOM. Blank lines are skipped.
inline std::vector<Record> Parse(std::string_view text, std::string_view source) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool after_quote = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
    after_quote = false;
  };
  auto end_record = [&] {
    const bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) records.push_back(std::move(current));
    current = Record{};
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_field();
      end_record();
      ++line;
      current.line = line;
    } else if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else {
      if (after_quote) {
        throw Error(ErrorCode::kParse, std::string(source) + ":" + std::to_string(line) +
                                           ": unexpected character after closing quote");
      }
      if (c == '"') {
        throw Error(ErrorCode::kParse, std::string(source) + ":" + std::to_string(line) +
                                           ": stray quote inside unquoted field");
      }
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kParse,
                std::string(source) + ":" + std::to_string(current.line) + ": unterminated quote");
  }
  if (field_started || !current.fields.empty()) {
    end_field();
    end_record();
  }
  return records;
}

inline std::string Escape(std::string_view field) {
  bool quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!field.empty() && (field.front() == ' ' || field.back() == ' ')) quote = true;
  if (!quote) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

/// One CSV line terminated by "\n".
inline std::string Row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += Escape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

/// Header-addressed view over parsed records.
class Table {
 public:
  Table(std::string_view text, std::string source) : source_(std::move(source)) {
    auto records = Parse(text, source_);
    if (records.empty()) {
      throw Error(ErrorCode::kParse, source_ + ": missing header row");
    }
    header_ = std::move(records.front().fields);
    for (auto& h : header_) h = Trim(h);
    rows_.assign(std::make_move_iterator(records.begin() + 1),
                 std::make_move_iterator(records.end()));
    for (const auto& row : rows_) {
      if (row.fields.size() != header_.size()) {
        throw Error(ErrorCode::kParse,
                    Locator(row) + ": expected " + std::to_string(header_.size()) +
                        " fields, found " + std::to_string(row.fields.size()));
      }
    }
  }

  std::optional<std::size_t> Column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (header_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t RequireColumn(std::string_view name) const {
    if (auto c = Column(name)) return *c;
    throw Error(ErrorCode::kParse,
                source_ + ":1: missing required column '" + std::string(name) + "'");
  }

  const std::vector<Record>& rows() const { return rows_; }
  const std::string& source() const { return source_; }

  std::string Locator(const Record& row) const {
    return source_ + ":" + std::to_string(row.line);
  }
  std::string Locator(const Record& row, std::string_view column) const {
    return Locator(row) + " field '" + std::string(column) + "'";
  }

  static std::string Trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return std::string(s.substr(b, e - b));
  }

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<Record> rows_;
};

}  // namespace coursediff::csv
