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

#include "actol/cfa.hpp"

#include <stdexcept>

namespace actol {

void Cfa::check_well_formed() const {
  auto in_range = [&](Location l) { return l >= 0 && l < num_locations; };
  if (!in_range(initial)) throw std::logic_error("cfa: initial location out of range");
  for (const auto& e : edges) {
    if (!in_range(e.src) || !in_range(e.dst)) {
      throw std::logic_error("cfa: edge endpoint out of range");
    }
  }
  for (Location l : errors) {
    if (!in_range(l)) throw std::logic_error("cfa: error location out of range");
  }
}

int Cfa::count_op_statements(BinOp op) const {
  int n = 0;
  for (const auto& e : edges) {
    if (e.stm.is_op_statement(op)) ++n;
  }
  return n;
}

namespace {

bool condition_is_linear(const BoolExpr& b) {
  switch (b.kind()) {
    case BoolExpr::Kind::Cmp:
      return b.lhs().to_linear().has_value() && b.rhs().to_linear().has_value();
    case BoolExpr::Kind::Not: return condition_is_linear(b.operand());
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Or:
      return condition_is_linear(b.left()) && condition_is_linear(b.right());
  }
  return false;
}

}  // namespace

bool is_three_address(const Cfa& cfa) {
  for (const auto& e : cfa.edges) {
    switch (e.stm.kind) {
      case Statement::Kind::Skip: break;
      case Statement::Kind::Assign: {
        const Expr& rhs = *e.stm.rhs;
        if (rhs.is_atomic() || rhs.kind() == Expr::Kind::Input) break;
        if (!e.stm.is_three_address_op()) return false;
        break;
      }
      case Statement::Kind::Assume:
        if (!condition_is_linear(*e.stm.cond)) return false;
        break;
    }
  }
  return true;
}

}  // namespace actol
