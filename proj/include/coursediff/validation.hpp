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

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coursediff/difficulty.hpp"
#include "coursediff/error.hpp"
#include "coursediff/rounding.hpp"

namespace coursediff {

/// Slack applied when testing an error against the tolerance, so decimal
/// values such as 0.3 compare as written.
inline constexpr double kToleranceSlack = 1e-9;

struct CourseComparison {
  std::string course_code;
  double actual_di = 0.0;     // grade-derived
  double estimated_di = 0.0;  // Bloom-derived
  double abs_error = 0.0;
  double squared_error = 0.0;
};

inline CourseComparison Compare(double actual, double estimated,
                                std::string course_code = {}) {
  for (double v : {actual, estimated}) {
    if (!(v >= 0.0 && v <= kDiScale)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "difficulty " + FormatShortest(v) + " is outside [0, 5]");
    }
  }
  const double abs_error = std::fabs(actual - estimated);
  return {std::move(course_code), actual, estimated, abs_error, abs_error * abs_error};
}

/// Comparison of two values given in exact tenths. The error is taken in
/// integer tenths before conversion, so |4.4 - 4.1| is exactly 0.3.
inline CourseComparison CompareTenths(std::int64_t actual_tenths,
                                      std::int64_t estimated_tenths,
                                      std::string course_code = {}) {
  const std::int64_t diff =
      actual_tenths > estimated_tenths ? actual_tenths - estimated_tenths
                                       : estimated_tenths - actual_tenths;
  auto out = Compare(static_cast<double>(actual_tenths) / 10.0,
                     static_cast<double>(estimated_tenths) / 10.0, std::move(course_code));
  out.abs_error = static_cast<double>(diff) / 10.0;
  out.squared_error = static_cast<double>(diff * diff) / 100.0;
  return out;
}

inline bool WithinTolerance(double abs_error, double tolerance) {
  return abs_error <= tolerance + kToleranceSlack;
}

struct ValidationReport {
  std::vector<CourseComparison> comparisons;
  double mean_actual = 0.0;
  double mean_estimated = 0.0;
  double mean_abs_error = 0.0;
  double mean_squared_error = 0.0;
  /// Fraction of courses whose abs_error is within tolerance.
  double accuracy = 0.0;
  int within_tolerance = 0;
  double tolerance = 0.0;
};

inline ValidationReport Summarize(std::span<const CourseComparison> comparisons,
                                  double tolerance) {
  if (comparisons.empty()) {
    throw Error(ErrorCode::kInsufficientData, "no course comparisons to summarize");
  }
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be > 0");
  }
  ValidationReport report;
  report.comparisons.assign(comparisons.begin(), comparisons.end());
  report.tolerance = tolerance;
  for (const auto& c : comparisons) {
    report.mean_actual += c.actual_di;
    report.mean_estimated += c.estimated_di;
    report.mean_abs_error += c.abs_error;
    report.mean_squared_error += c.squared_error;
    if (WithinTolerance(c.abs_error, tolerance)) ++report.within_tolerance;
  }
  const auto n = static_cast<double>(comparisons.size());
  report.mean_actual /= n;
  report.mean_estimated /= n;
  report.mean_abs_error /= n;
  report.mean_squared_error /= n;
  report.accuracy = report.within_tolerance / n;
  return report;
}

}  // namespace coursediff
