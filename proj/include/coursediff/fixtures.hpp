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

// Generated by tools/embed_fixtures.py from data/. Do not edit.

#pragma once

#include <array>
#include <string_view>

namespace coursediff {

struct Fixture {
  std::string_view name;
  std::string_view content;
};

inline constexpr std::array<Fixture, 8> kFixtures = {{
    {"table1.json", R"fx({
  "provenance": "table1-canonical",
  "criteria": [
    {
      "id": "a",
      "description": "an ability to apply knowledge of mathematics, science, and engineering",
      "levels": [1, 2, 3]
    },
    {
      "id": "b",
      "description": "an ability to design and conduct experiments, as well as to analyze and interpret data",
      "levels": [1, 2, 3, 4, 5, 6]
    },
    {
      "id": "c",
      "description": "an ability to design a system, component, or process to meet desired needs within realistic constraints such as economic, environmental, social, political, ethical, health and safety, manufacturability, and sustainability",
      "levels": [1, 2, 3, 4, 5, 6]
    },
    {
      "id": "d",
      "description": "an ability to function on multidisciplinary teams",
      "levels": [1, 2, 3]
    },
    {
      "id": "e",
      "description": "an ability to identify, formulate, and solve engineering problems",
      "levels": [1, 2, 3, 4, 5, 6]
    },
    {
      "id": "f",
      "description": "an understanding of professional and ethical responsibility",
      "levels": [1, 2]
    },
    {
      "id": "g",
      "description": "an ability to communicate effectively",
      "levels": [1, 2]
    },
    {
      "id": "h",
      "description": "the broad education necessary to understand the impact of engineering solutions in a global, economic, environmental, and societal context",
      "levels": [1, 2, 3]
    },
    {
      "id": "i",
      "description": "a recognition of the need for, and an ability to engage in life-long learning",
      "levels": [1, 2, 3, 4, 5, 6]
    },
    {
      "id": "j",
      "description": "a knowledge of contemporary issues",
      "levels": [1]
    },
    {
      "id": "k",
      "description": "an ability to use the techniques, skills, and modern engineering tools necessary for engineering practice.",
      "levels": [1, 2, 3]
    },
    {
      "id": "l",
      "description": "An ability to apply mathematical foundations, algorithmic principles and computer science theory in modeling and design of computer-based systems (CBC)",
      "levels": [1, 2, 3, 4, 5, 6]
    },
    {
      "id": "m",
      "description": "An ability to apply design and development principles in the construction of software systems (CS)",
      "levels": [1, 2, 3, 4, 5, 6]
    }
  ]
}
)fx"},
    {"table1.csv", R"fx(id,description,levels
a,"an ability to apply knowledge of mathematics, science, and engineering",1|2|3
b,"an ability to design and conduct experiments, as well as to analyze and interpret data",1|2|3|4|5|6
c,"an ability to design a system, component, or process to meet desired needs within realistic constraints such as economic, environmental, social, political, ethical, health and safety, manufacturability, and sustainability",1|2|3|4|5|6
d,an ability to function on multidisciplinary teams,1|2|3
e,"an ability to identify, formulate, and solve engineering problems",1|2|3|4|5|6
f,an understanding of professional and ethical responsibility,1|2
g,an ability to communicate effectively,1|2
h,"the broad education necessary to understand the impact of engineering solutions in a global, economic, environmental, and societal context",1|2|3
i,"a recognition of the need for, and an ability to engage in life-long learning",1|2|3|4|5|6
j,a knowledge of contemporary issues,1
k,"an ability to use the techniques, skills, and modern engineering tools necessary for engineering practice.",1|2|3
l,"An ability to apply mathematical foundations, algorithmic principles and computer science theory in modeling and design of computer-based systems (CBC)",1|2|3|4|5|6
m,An ability to apply design and development principles in the construction of software systems (CS),1|2|3|4|5|6
)fx"},
    {"table2_asprinted.csv", R"fx(course_code,title,criteria,overrides
C1,,a|b|e|i|k|l,
C2,,a|b|e|i|k|l,
C3,,b|c|i|k|l|m,
C4,,a|b|c|e|i|l,
C5,,a|b|i|k|l|m,
C6,,a|b|e|i|k|l,
C7,,a|b|e|i|k|l,
C8,,c|e|j|k|l,j:6
C9,,a|h|k|l,h:5
C10,,b|e|h|i|k|l,h:5
C11,,d|f|g|j,j:6
)fx"},
    {"table2_canonical.csv", R"fx(course_code,title,criteria,overrides
C1,,a|b|e|i|k|l,
C2,,a|b|e|i|k|l,
C3,,b|c|i|k|l|m,
C4,,a|b|c|e|i|l,
C5,,a|b|i|k|l|m,
C6,,a|b|e|i|k|l,
C7,,a|b|e|i|k|l,
C8,,c|e|j|k|l,
C9,,a|h|k|l,
C10,,b|e|h|i|k|l,
C11,,d|f|g|j,
)fx"},
    {"table3_grades.csv", R"fx(course_code,generation,kind,value
C1,Generation 1,di,4.2
C1,Generation 2,di,3.4
C1,Generation 3,di,4.4
C2,Generation 1,di,4.2
C2,Generation 2,di,4.1
C2,Generation 3,di,3.8
C3,Generation 1,di,4.3
C3,Generation 2,di,3.9
C3,Generation 3,di,4.2
C4,Generation 1,di,3.9
C4,Generation 2,di,4.2
C4,Generation 3,di,4.5
C5,Generation 1,di,3.9
C5,Generation 2,di,3.8
C5,Generation 3,di,4.3
C6,Generation 1,di,4.1
C6,Generation 2,di,4.3
C6,Generation 3,di,3.9
C7,Generation 1,di,3.6
C7,Generation 2,di,3.4
C7,Generation 3,di,3.8
C8,Generation 1,di,3.4
C8,Generation 2,di,3.8
C8,Generation 3,di,3.6
C9,Generation 1,di,2.4
C9,Generation 2,di,2.6
C9,Generation 3,di,2.1
C10,Generation 1,di,4.2
C10,Generation 2,di,3.9
C10,Generation 3,di,4.1
C11,Generation 1,di,1.6
C11,Generation 2,di,1.2
C11,Generation 3,di,1.4
)fx"},
    {"worked_example.csv", R"fx(course_code,title,criteria,overrides
EX1,Worked example,a|h|k|l,
)fx"},
    {"figure1_statements.csv", R"fx(criterion_id,text
a,"an ability to apply knowledge of mathematics, science, and engineering"
b,"an ability to design and conduct experiments, as well as to analyze and interpret data"
c,"an ability to design a system, component, or process to meet desired needs within realistic constraints such as economic, environmental, social, political, ethical, health and safety, manufacturability, and sustainability"
d,an ability to function on multidisciplinary teams
e,"an ability to identify, formulate, and solve engineering problems"
f,an understanding of professional and ethical responsibility
g,an ability to communicate effectively
h,"the broad education necessary to understand the impact of engineering solutions in a global, economic, environmental, and societal context"
i,"a recognition of the need for, and an ability to engage in life-long learning"
j,a knowledge of contemporary issues
k,"an ability to use the techniques, skills, and modern engineering tools necessary for engineering practice."
l,"An ability to apply mathematical foundations, algorithmic principles and computer science theory in modeling and design of computer-based systems (CBC)"
m,An ability to apply design and development principles in the construction of software systems (CS)
)fx"},
    {"bloom_verbs_default.json", R"fx({
  "note": "Default action-verb list compiled from commonly published revised-Bloom verb tables. Non-normative: replace or extend it to match local practice.",
  "verbs": [
    {
      "verb": "adapt",
      "levels": [6]
    },
    {
      "verb": "analyse",
      "levels": [4]
    },
    {
      "verb": "analyze",
      "levels": [4]
    },
    {
      "verb": "apply",
      "levels": [3]
    },
    {
      "verb": "appraise",
      "levels": [5]
    },
    {
      "verb": "argue",
      "levels": [5]
    },
    {
      "verb": "assemble",
      "levels": [6]
    },
    {
      "verb": "assess",
      "levels": [5]
    },
    {
      "verb": "attribute",
      "levels": [4]
    },
    {
      "verb": "author",
      "levels": [6]
    },
    {
      "verb": "break",
      "levels": [4]
    },
    {
      "verb": "build",
      "levels": [6]
    },
    {
      "verb": "calculate",
      "levels": [3]
    },
    {
      "verb": "carry",
      "levels": [3]
    },
    {
      "verb": "categorize",
      "levels": [4]
    },
    {
      "verb": "change",
      "levels": [3]
    },
    {
      "verb": "check",
      "levels": [5]
    },
    {
      "verb": "choose",
      "levels": [1]
    },
    {
      "verb": "cite",
      "levels": [1]
    },
    {
      "verb": "classify",
      "levels": [2]
    },
    {
      "verb": "combine",
      "levels": [6]
    },
    {
      "verb": "communicate",
      "levels": [2]
    },
    {
      "verb": "compare",
      "levels": [2, 4]
    },
    {
      "verb": "compile",
      "levels": [6]
    },
    {
      "verb": "compose",
      "levels": [6]
    },
    {
      "verb": "compute",
      "levels": [3]
    },
    {
      "verb": "conclude",
      "levels": [5]
    },
    {
      "verb": "conduct",
      "levels": [3]
    },
    {
      "verb": "construct",
      "levels": [3, 6]
    },
    {
      "verb": "contrast",
      "levels": [2, 4]
    },
    {
      "verb": "convert",
      "levels": [2]
    },
    {
      "verb": "create",
      "levels": [6]
    },
    {
      "verb": "criticize",
      "levels": [5]
    },
    {
      "verb": "critique",
      "levels": [5]
    },
    {
      "verb": "decide",
      "levels": [5]
    },
    {
      "verb": "deconstruct",
      "levels": [4]
    },
    {
      "verb": "defend",
      "levels": [2, 5]
    },
    {
      "verb": "define",
      "levels": [1]
    },
    {
      "verb": "demonstrate",
      "levels": [3]
    },
    {
      "verb": "describe",
      "levels": [1, 2]
    },
    {
      "verb": "design",
      "levels": [6]
    },
    {
      "verb": "determine",
      "levels": [5]
    },
    {
      "verb": "develop",
      "levels": [6]
    },
    {
      "verb": "devise",
      "levels": [6]
    },
    {
      "verb": "diagram",
      "levels": [4]
    },
    {
      "verb": "differentiate",
      "levels": [4]
    },
    {
      "verb": "discover",
      "levels": [3]
    },
    {
      "verb": "discriminate",
      "levels": [4]
    },
    {
      "verb": "discuss",
      "levels": [2]
    },
    {
      "verb": "dissect",
      "levels": [4]
    },
    {
      "verb": "distinguish",
      "levels": [2, 4]
    },
    {
      "verb": "duplicate",
      "levels": [1]
    },
    {
      "verb": "employ",
      "levels": [3]
    },
    {
      "verb": "estimate",
      "levels": [2]
    },
    {
      "verb": "evaluate",
      "levels": [5]
    },
    {
      "verb": "examine",
      "levels": [4]
    },
    {
      "verb": "execute",
      "levels": [3]
    },
    {
      "verb": "exemplify",
      "levels": [2]
    },
    {
      "verb": "experiment",
      "levels": [3, 4]
    },
    {
      "verb": "explain",
      "levels": [2]
    },
    {
      "verb": "express",
      "levels": [2]
    },
    {
      "verb": "extend",
      "levels": [2]
    },
    {
      "verb": "find",
      "levels": [1]
    },
    {
      "verb": "formulate",
      "levels": [6]
    },
    {
      "verb": "generalize",
      "levels": [2]
    },
    {
      "verb": "generate",
      "levels": [6]
    },
    {
      "verb": "hypothesize",
      "levels": [6]
    },
    {
      "verb": "identify",
      "levels": [1]
    },
    {
      "verb": "illustrate",
      "levels": [2, 3]
    },
    {
      "verb": "implement",
      "levels": [3]
    },
    {
      "verb": "infer",
      "levels": [2]
    },
    {
      "verb": "inspect",
      "levels": [4]
    },
    {
      "verb": "integrate",
      "levels": [6]
    },
    {
      "verb": "interpret",
      "levels": [2]
    },
    {
      "verb": "interview",
      "levels": [3]
    },
    {
      "verb": "invent",
      "levels": [6]
    },
    {
      "verb": "investigate",
      "levels": [4]
    },
    {
      "verb": "judge",
      "levels": [5]
    },
    {
      "verb": "justify",
      "levels": [5]
    },
    {
      "verb": "label",
      "levels": [1]
    },
    {
      "verb": "list",
      "levels": [1]
    },
    {
      "verb": "locate",
      "levels": [1]
    },
    {
      "verb": "manipulate",
      "levels": [3]
    },
    {
      "verb": "match",
      "levels": [1]
    },
    {
      "verb": "measure",
      "levels": [5]
    },
    {
      "verb": "memorize",
      "levels": [1]
    },
    {
      "verb": "model",
      "levels": [6]
    },
    {
      "verb": "modify",
      "levels": [3, 6]
    },
    {
      "verb": "monitor",
      "levels": [5]
    },
    {
      "verb": "name",
      "levels": [1]
    },
    {
      "verb": "operate",
      "levels": [3]
    },
    {
      "verb": "organize",
      "levels": [4]
    },
    {
      "verb": "originate",
      "levels": [6]
    },
    {
      "verb": "outline",
      "levels": [1, 4]
    },
    {
      "verb": "paraphrase",
      "levels": [2]
    },
    {
      "verb": "perform",
      "levels": [3]
    },
    {
      "verb": "plan",
      "levels": [6]
    },
    {
      "verb": "practice",
      "levels": [3]
    },
    {
      "verb": "predict",
      "levels": [2]
    },
    {
      "verb": "prepare",
      "levels": [3]
    },
    {
      "verb": "prioritize",
      "levels": [5]
    },
    {
      "verb": "produce",
      "levels": [3, 6]
    },
    {
      "verb": "propose",
      "levels": [6]
    },
    {
      "verb": "prove",
      "levels": [5]
    },
    {
      "verb": "question",
      "levels": [4]
    },
    {
      "verb": "rank",
      "levels": [5]
    },
    {
      "verb": "rate",
      "levels": [5]
    },
    {
      "verb": "rearrange",
      "levels": [6]
    },
    {
      "verb": "recall",
      "levels": [1]
    },
    {
      "verb": "recite",
      "levels": [1]
    },
    {
      "verb": "recognize",
      "levels": [1]
    },
    {
      "verb": "recommend",
      "levels": [5]
    },
    {
      "verb": "reconstruct",
      "levels": [6]
    },
    {
      "verb": "record",
      "levels": [1]
    },
    {
      "verb": "relate",
      "levels": [1, 3, 4]
    },
    {
      "verb": "reorganize",
      "levels": [6]
    },
    {
      "verb": "repeat",
      "levels": [1]
    },
    {
      "verb": "report",
      "levels": [2]
    },
    {
      "verb": "reproduce",
      "levels": [1]
    },
    {
      "verb": "restate",
      "levels": [2]
    },
    {
      "verb": "retrieve",
      "levels": [1]
    },
    {
      "verb": "review",
      "levels": [2]
    },
    {
      "verb": "revise",
      "levels": [6]
    },
    {
      "verb": "rewrite",
      "levels": [2]
    },
    {
      "verb": "schedule",
      "levels": [3]
    },
    {
      "verb": "select",
      "levels": [1, 5]
    },
    {
      "verb": "separate",
      "levels": [4]
    },
    {
      "verb": "show",
      "levels": [3]
    },
    {
      "verb": "simplify",
      "levels": [4]
    },
    {
      "verb": "sketch",
      "levels": [3]
    },
    {
      "verb": "solve",
      "levels": [3]
    },
    {
      "verb": "state",
      "levels": [1]
    },
    {
      "verb": "structure",
      "levels": [4]
    },
    {
      "verb": "summarize",
      "levels": [2]
    },
    {
      "verb": "support",
      "levels": [5]
    },
    {
      "verb": "survey",
      "levels": [4]
    },
    {
      "verb": "synthesize",
      "levels": [6]
    },
    {
      "verb": "tell",
      "levels": [1]
    },
    {
      "verb": "test",
      "levels": [4, 5]
    },
    {
      "verb": "translate",
      "levels": [2]
    },
    {
      "verb": "understand",
      "levels": [2]
    },
    {
      "verb": "use",
      "levels": [3]
    },
    {
      "verb": "validate",
      "levels": [5]
    },
    {
      "verb": "value",
      "levels": [5]
    },
    {
      "verb": "verify",
      "levels": [5]
    },
    {
      "verb": "weigh",
      "levels": [5]
    },
    {
      "verb": "write",
      "levels": [6]
    }
  ]
}
)fx"},
}};

/// Looks a fixture up by file name or by stem ("table1" -> table1.json,
/// the first listed format).
inline const Fixture* FindFixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return &f;
  }
  for (const auto& f : kFixtures) {
    const auto dot = f.name.rfind('.');
    if (f.name.substr(0, dot) == name) return &f;
  }
  return nullptr;
}

}  // namespace coursediff
