#!/usr/bin/env python3
# Copyright 2026 The coursediff Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates include/coursediff/fixtures.hpp from the files in data/.

Run after editing anything under data/; the FixturesTest suite fails when
the two drift apart.
"""

import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = [
    "table1.json",
    "table1.csv",
    "table2_asprinted.csv",
    "table2_canonical.csv",
    "table3_grades.csv",
    "worked_example.csv",
    "figure1_statements.csv",
    "bloom_verbs_default.json",
]

HEADER = (ROOT / "tools" / "embed_fixtures.py").read_text().split('"""')[0]
LICENSE = "".join(
    "//" + line[1:] + "\n" for line in HEADER.splitlines()[1:] if line.startswith("#")
)


def main() -> None:
    out = [LICENSE, "\n// Generated by tools/embed_fixtures.py from data/. Do not edit.\n\n"]
    out.append("#pragma once\n\n#include <array>\n#include <string_view>\n\n")
    out.append("namespace coursediff {\n\n")
    out.append("struct Fixture {\n  std::string_view name;\n  std::string_view content;\n};\n\n")
    out.append(f"inline constexpr std::array<Fixture, {len(FILES)}> kFixtures = {{{{\n")
    for name in FILES:
        text = (ROOT / "data" / name).read_text()
        assert ')fx"' not in text
        out.append(f'    {{"{name}", R"fx({text})fx"}},\n')
    out.append("}};\n\n")
    out.append(
        "/// Looks a fixture up by file name or by stem (\"table1\" -> table1.json,\n"
        "/// the first listed format).\n"
        "inline const Fixture* FindFixture(std::string_view name) {\n"
        "  for (const auto& f : kFixtures) {\n"
        "    if (f.name == name) return &f;\n"
        "  }\n"
        "  for (const auto& f : kFixtures) {\n"
        "    const auto dot = f.name.rfind('.');\n"
        "    if (f.name.substr(0, dot) == name) return &f;\n"
        "  }\n"
        "  return nullptr;\n"
        "}\n\n"
    )
    out.append("}  // namespace coursediff\n")
    (ROOT / "include" / "coursediff" / "fixtures.hpp").write_text("".join(out))


if __name__ == "__main__":
    main()
