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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <system_error>

namespace coursediff {

/// Rounds num/den to the nearest tenth, half away from zero, and returns the
/// result in tenths. Exact: no floating point is involved. den must be > 0.
constexpr std::int64_t RoundRatioToTenths(std::int64_t num, std::int64_t den) {
  const bool negative = num < 0;
  const std::int64_t n = negative ? -num : num;
  const std::int64_t tenths = (20 * n + den) / (2 * den);
  return negative ? -tenths : tenths;
}

/// Rounds to `places` decimals, half away from zero. A value within 1e-9
/// (in units of the last place) of a decimal tie is treated as the tie, so
/// binary representation noise never decides the direction.
inline double RoundDecimal(double value, int places) {
  const double scale = std::pow(10.0, places);
  const double scaled = value * scale;
  const double floor = std::floor(scaled);
  const double frac = scaled - floor;
  double rounded;
  if (std::fabs(frac - 0.5) < 1e-9) {
    rounded = scaled >= 0 ? floor + 1.0 : floor;
  } else {
    rounded = std::round(scaled);
  }
  const double out = rounded / scale;
  return out == 0.0 ? 0.0 : out;  // no negative zero
}

inline double RoundTenths(double value) { return RoundDecimal(value, 1); }

/// Fixed-point text with `places` decimals after rounding half away from
/// zero, e.g. FormatFixed(3.25, 1) == "3.3".
inline std::string FormatFixed(double value, int places) {
  const double rounded = RoundDecimal(value, places);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), rounded, std::chars_format::fixed,
                           places);
  return std::string(buf, res.ptr);
}

inline std::string FormatTenths(double value) { return FormatFixed(value, 1); }

/// Shortest text that parses back to the same double.
inline std::string FormatShortest(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace coursediff
