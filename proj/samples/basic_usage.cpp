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

// Estimates one course from the canonical catalog and compares it with a
// grade history given as class averages.

#include <iostream>

#include "coursediff/catalog.hpp"
#include "coursediff/difficulty.hpp"
#include "coursediff/rounding.hpp"
#include "coursediff/validation.hpp"

int main() {
  using namespace coursediff;

  const auto& catalog = CanonicalCatalog();
  const Course course{"CS201", "Data Structures", {"a", "h", "k", "l"}, {}};
  const auto bloom = ComputeBloomDifficulty(course, catalog);

  const GradeHistory history{"CS201",
                             {{"2019", GradeKind::kPercent, 52.0},
                              {"2020", GradeKind::kPercent, 47.5},
                              {"2021", GradeKind::kPercent, 55.0}}};
  const double grade_di = GradeDifficulty(history);
  const auto cmp = Compare(RoundTenths(grade_di), bloom.Reported(), course.code);

  std::cout << course.code << ": raw " << bloom.raw_total << "/" << bloom.max_total
            << ", Bloom DI " << FormatTenths(bloom.Reported()) << ", grade DI "
            << FormatTenths(grade_di) << ", |error| " << FormatTenths(cmp.abs_error) << "\n";
  return 0;
}
