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
//
// Expression and statement representation for the mini imperative
// language. Expressions are immutable trees shared by value.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actol/logic.hpp"
#include "actol/numeric.hpp"

namespace actol {

enum class BinOp { Add, Sub, Mul, Div };

char op_symbol(BinOp op);

class Expr {
 public:
  enum class Kind { Const, Var, Bin, Input };

  Expr() : Expr(constant(0)) {}

  static Expr constant(Int value);
  static Expr variable(std::string name);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);
  static Expr input();

  Kind kind() const { return node_->kind; }
  const Int& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  BinOp op() const { return node_->op; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  bool is_atomic() const { return kind() == Kind::Const || kind() == Kind::Var; }
  bool uses_input() const;
  bool uses_op(BinOp op) const;
  void collect_variables(std::set<std::string>& out) const;

  // Conversion to a linear term; fails on division, nonlinear products,
  // and nondeterministic sources.
  std::optional<LinearTerm> to_linear() const;

  bool equals(const Expr& other) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Int value;         // Const
    std::string name;  // Var
    BinOp op = BinOp::Add;
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Expr(const Node& proto) : node_(std::make_shared<const Node>(proto)) {}

  std::shared_ptr<const Node> node_;
};

class BoolExpr {
 public:
  enum class Kind { Cmp, And, Or, Not };

  static BoolExpr cmp(Cmp op, Expr lhs, Expr rhs);
  static BoolExpr conj(BoolExpr a, BoolExpr b);
  static BoolExpr disj(BoolExpr a, BoolExpr b);
  static BoolExpr negation(BoolExpr a);

  Kind kind() const { return node_->kind; }
  Cmp cmp_op() const { return node_->cmp; }
  const Expr& lhs() const { return *node_->lhs; }
  const Expr& rhs() const { return *node_->rhs; }
  const BoolExpr& left() const { return *node_->a; }
  const BoolExpr& right() const { return *node_->b; }
  const BoolExpr& operand() const { return *node_->a; }

  bool uses_op(BinOp op) const;
  void collect_variables(std::set<std::string>& out) const;

  // Structural negation check: true iff one side is Not(other).
  static bool complementary(const BoolExpr& a, const BoolExpr& b);

  bool equals(const BoolExpr& other) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Cmp cmp = Cmp::Eq;
    std::shared_ptr<const Expr> lhs, rhs;  // Cmp
    std::shared_ptr<const BoolExpr> a, b;  // And/Or/Not
  };

  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A CFA edge label. Assume guards a transition; Assign updates one scalar
// variable; Skip does nothing (array writes and array declarations lower
// to labeled skips).
struct Statement {
  enum class Kind { Assume, Assign, Skip };

  static Statement assume(BoolExpr cond);
  static Statement assign(std::string target, Expr rhs);
  static Statement skip(std::string label = "");

  Kind kind = Kind::Skip;
  std::optional<BoolExpr> cond;  // Assume
  std::string target;            // Assign
  std::optional<Expr> rhs;       // Assign
  std::string label;             // display text for Skip

  // True for `v := a op b` with atomic operands.
  bool is_three_address_op() const;
  bool is_op_statement(BinOp op) const;

  std::string to_string() const;
};

}  // namespace actol
