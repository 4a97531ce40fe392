// Copyright 2026 The Actol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "actol/cfa.hpp"

namespace actol {

struct ParseResult {
  Cfa cfa;
  std::vector<std::string> warnings;
};

// Parses a program in the mini imperative language:
//
//   program := decl* stmt*
//   decl    := "int" ident ";" | "int" ident "[" intlit "]" ";"
//   stmt    := ident ":=" expr ";"
//            | ident ":=" "input" "(" ")" ";"
//            | ident "[" expr "]" ":=" expr ";"
//            | "if" "(" bexpr ")" block ("else" block)?
//            | "while" "(" bexpr ")" block
//            | "ERR" ":" ";"
//   block   := "{" stmt* "}" | stmt
//
// Conditionals and loops desugar into assume-edge pairs. `ERR:` marks its
// location as an error location and ends the branch; statements that can
// only follow an `ERR:` are pruned with a warning. The names x, y and z
// are reserved for the hardware signature and cannot be declared.
ParseResult parse_program(const std::string& source, const std::string& filename = "<input>");

// One predicate atom per line in program-expression syntax (`j >= 0`);
// `#` starts a comment. Atoms must be linear and mention only declared
// variables.
std::vector<LinearAtom> parse_predicates(const std::string& text, const Cfa& cfa,
                                         const std::string& filename = "<predicates>");

struct RankingSpec {
  int loop_line = 0;  // source line of the while keyword
  Expr rank;          // linear expression over program variables
  int spec_line = 0;  // line in the ranking file, for diagnostics
};

// One line per loop: `at <line> rank <linear-expr>`; `#` comments.
std::vector<RankingSpec> parse_ranking(const std::string& text, const Cfa& cfa,
                                       const std::string& filename = "<ranking>");

// Parses a bare expression (used by the ranking parser and tests).
Expr parse_expression_text(const std::string& text, const std::string& filename = "<expr>");

// Parses `expr cmp expr` into canonical atom form.
LinearAtom parse_atom_text(const std::string& text, const std::string& filename = "<atom>");

}  // namespace actol
