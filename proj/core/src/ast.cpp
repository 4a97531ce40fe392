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

#include "actol/ast.hpp"

namespace actol {

char op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return '+';
    case BinOp::Sub: return '-';
    case BinOp::Mul: return '*';
    case BinOp::Div: return '/';
  }
  return '?';
}

// ---------------------------------------------------------------------- Expr

Expr Expr::constant(Int value) {
  Node n;
  n.kind = Kind::Const;
  n.value = std::move(value);
  return Expr(n);
}

Expr Expr::variable(std::string name) {
  Node n;
  n.kind = Kind::Var;
  n.name = std::move(name);
  return Expr(n);
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  Node n;
  n.kind = Kind::Bin;
  n.op = op;
  n.lhs = lhs.node_;
  n.rhs = rhs.node_;
  return Expr(n);
}

Expr Expr::input() {
  Node n;
  n.kind = Kind::Input;
  return Expr(n);
}

bool Expr::uses_input() const {
  switch (kind()) {
    case Kind::Input: return true;
    case Kind::Bin: return lhs().uses_input() || rhs().uses_input();
    default: return false;
  }
}

bool Expr::uses_op(BinOp op) const {
  if (kind() != Kind::Bin) return false;
  return this->op() == op || lhs().uses_op(op) || rhs().uses_op(op);
}

void Expr::collect_variables(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Var: out.insert(name()); break;
    case Kind::Bin:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
      break;
    default: break;
  }
}

std::optional<LinearTerm> Expr::to_linear() const {
  switch (kind()) {
    case Kind::Const: return LinearTerm(value());
    case Kind::Var: return LinearTerm::variable(name());
    case Kind::Input: return std::nullopt;
    case Kind::Bin: {
      if (op() == BinOp::Div) return std::nullopt;
      auto l = lhs().to_linear();
      auto r = rhs().to_linear();
      if (!l || !r) return std::nullopt;
      switch (op()) {
        case BinOp::Add: return *l + *r;
        case BinOp::Sub: return *l - *r;
        case BinOp::Mul:
          if (l->is_constant()) return r->scaled(l->constant());
          if (r->is_constant()) return l->scaled(r->constant());
          return std::nullopt;  // variable * variable
        default: return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

bool Expr::equals(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Const: return value() == other.value();
    case Kind::Var: return name() == other.name();
    case Kind::Input: return true;
    case Kind::Bin:
      return op() == other.op() && lhs().equals(other.lhs()) && rhs().equals(other.rhs());
  }
  return false;
}

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::Const: return actol::to_string(value());
    case Kind::Var: return name();
    case Kind::Input: return "input()";
    case Kind::Bin: {
      auto wrap = [](const Expr& e) {
        std::string s = e.to_string();
        return e.kind() == Kind::Bin ? "(" + s + ")" : s;
      };
      return wrap(lhs()) + " " + op_symbol(op()) + " " + wrap(rhs());
    }
  }
  return "";
}

// ------------------------------------------------------------------ BoolExpr

BoolExpr BoolExpr::cmp(Cmp op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cmp;
  n->cmp = op;
  n->lhs = std::make_shared<const Expr>(std::move(lhs));
  n->rhs = std::make_shared<const Expr>(std::move(rhs));
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::conj(BoolExpr a, BoolExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::make_shared<const BoolExpr>(std::move(a));
  n->b = std::make_shared<const BoolExpr>(std::move(b));
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::disj(BoolExpr a, BoolExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::make_shared<const BoolExpr>(std::move(a));
  n->b = std::make_shared<const BoolExpr>(std::move(b));
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::negation(BoolExpr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::make_shared<const BoolExpr>(std::move(a));
  return BoolExpr(std::move(n));
}

bool BoolExpr::uses_op(BinOp op) const {
  switch (kind()) {
    case Kind::Cmp: return lhs().uses_op(op) || rhs().uses_op(op);
    case Kind::Not: return operand().uses_op(op);
    case Kind::And:
    case Kind::Or: return left().uses_op(op) || right().uses_op(op);
  }
  return false;
}

void BoolExpr::collect_variables(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Cmp:
      lhs().collect_variables(out);
      rhs().collect_variables(out);
      break;
    case Kind::Not: operand().collect_variables(out); break;
    case Kind::And:
    case Kind::Or:
      left().collect_variables(out);
      right().collect_variables(out);
      break;
  }
}

bool BoolExpr::complementary(const BoolExpr& a, const BoolExpr& b) {
  if (a.kind() == Kind::Not && a.operand().equals(b)) return true;
  if (b.kind() == Kind::Not && b.operand().equals(a)) return true;
  return false;
}

bool BoolExpr::equals(const BoolExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Cmp:
      return cmp_op() == other.cmp_op() && lhs().equals(other.lhs()) && rhs().equals(other.rhs());
    case Kind::Not: return operand().equals(other.operand());
    case Kind::And:
    case Kind::Or: return left().equals(other.left()) && right().equals(other.right());
  }
  return false;
}

std::string BoolExpr::to_string() const {
  switch (kind()) {
    case Kind::Cmp: {
      const char* sym = "";
      switch (cmp_op()) {
        case Cmp::Lt: sym = "<"; break;
        case Cmp::Le: sym = "<="; break;
        case Cmp::Gt: sym = ">"; break;
        case Cmp::Ge: sym = ">="; break;
        case Cmp::Eq: sym = "=="; break;
        case Cmp::Ne: sym = "!="; break;
      }
      return lhs().to_string() + " " + sym + " " + rhs().to_string();
    }
    case Kind::Not: return "!(" + operand().to_string() + ")";
    case Kind::And: {
      auto wrap = [](const BoolExpr& e) {
        std::string s = e.to_string();
        return e.kind() == Kind::Or ? "(" + s + ")" : s;
      };
      return wrap(left()) + " && " + wrap(right());
    }
    case Kind::Or: return left().to_string() + " || " + right().to_string();
  }
  return "";
}

// ----------------------------------------------------------------- Statement

Statement Statement::assume(BoolExpr cond) {
  Statement s;
  s.kind = Kind::Assume;
  s.cond = std::move(cond);
  return s;
}

Statement Statement::assign(std::string target, Expr rhs) {
  Statement s;
  s.kind = Kind::Assign;
  s.target = std::move(target);
  s.rhs = std::move(rhs);
  return s;
}

Statement Statement::skip(std::string label) {
  Statement s;
  s.kind = Kind::Skip;
  s.label = std::move(label);
  return s;
}

bool Statement::is_three_address_op() const {
  if (kind != Kind::Assign) return false;
  if (rhs->kind() != Expr::Kind::Bin) return false;
  return rhs->lhs().is_atomic() && rhs->rhs().is_atomic();
}

bool Statement::is_op_statement(BinOp op) const {
  return is_three_address_op() && rhs->op() == op;
}

std::string Statement::to_string() const {
  switch (kind) {
    case Kind::Assume: return "assume " + cond->to_string();
    case Kind::Assign: return target + " := " + rhs->to_string() + ";";
    case Kind::Skip: return label.empty() ? "skip;" : label;
  }
  return "";
}

}  // namespace actol
