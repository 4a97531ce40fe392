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
// Linear-integer literals, conjunctions, the replacement operator, and a
// sound entailment oracle (Fourier-Motzkin refutation over the rationals
// with integer tightening of strict comparisons).

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actol/numeric.hpp"

namespace actol {

// Sum of integer-coefficient monomials plus a constant. Zero coefficients
// are never stored.
class LinearTerm {
 public:
  LinearTerm() = default;
  explicit LinearTerm(Int constant) : constant_(std::move(constant)) {}
  static LinearTerm variable(const std::string& name, Int coeff = 1);

  LinearTerm& operator+=(const LinearTerm& other);
  LinearTerm& operator-=(const LinearTerm& other);
  friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
  friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
  LinearTerm operator-() const { return scaled(-1); }
  LinearTerm scaled(const Int& k) const;

  const std::map<std::string, Int>& coefficients() const { return coeffs_; }
  const Int& constant() const { return constant_; }
  bool is_constant() const { return coeffs_.empty(); }
  Int coefficient(const std::string& var) const;
  bool mentions(const std::string& var) const { return coeffs_.count(var) != 0; }

  // Replaces `from` by `to`, merging coefficients when `to` is present.
  LinearTerm renamed(const std::string& from, const std::string& to) const;

  template <typename Lookup>
  Int evaluate(Lookup&& value_of) const {
    Int acc = constant_;
    for (const auto& [var, coeff] : coeffs_) acc += coeff * value_of(var);
    return acc;
  }

  bool operator==(const LinearTerm& other) const = default;
  std::strong_ordering operator<=>(const LinearTerm& other) const;

 private:
  std::map<std::string, Int> coeffs_;
  Int constant_ = 0;
};

// Surface comparison operators.
enum class Cmp { Lt, Le, Gt, Ge, Eq, Ne };

// A literal in canonical form: term REL 0 with REL one of {<=, =, !=}.
// Strict comparisons are tightened at construction (t < 0 becomes
// t + 1 <= 0, exact over the integers). Negation closes within the
// representation, so stored literals are always positive-form atoms.
class LinearAtom {
 public:
  enum class Rel { Le, Eq, Ne };

  LinearAtom(const LinearTerm& lhs, Cmp cmp, const LinearTerm& rhs);
  LinearAtom(Rel rel, LinearTerm term);

  Rel rel() const { return rel_; }
  const LinearTerm& term() const { return term_; }

  // Truth value when the atom is variable-free.
  std::optional<bool> constant_value() const;

  LinearAtom complement() const;

  bool mentions(const std::string& var) const { return term_.mentions(var); }
  void collect_variables(std::set<std::string>& out) const;

  LinearAtom renamed(const std::string& from, const std::string& to) const;

  template <typename Lookup>
  bool evaluate(Lookup&& value_of) const {
    Int v = term_.evaluate(value_of);
    switch (rel_) {
      case Rel::Le: return v <= 0;
      case Rel::Eq: return v == 0;
      case Rel::Ne: return v != 0;
    }
    return false;
  }

  // Renders as "a + 1 <= b" with monomials split by sign.
  std::string to_string() const;

  bool operator==(const LinearAtom& other) const = default;
  std::strong_ordering operator<=>(const LinearAtom& other) const;

 private:
  void canonicalize();

  Rel rel_;
  LinearTerm term_;
};

using Literal = LinearAtom;

// Conjunction of literals, or the distinguished unsatisfiable bottom.
// The empty conjunction is true. Inserting a literal together with its
// complement collapses to bottom.
class Conjunction {
 public:
  Conjunction() = default;
  static Conjunction top() { return Conjunction(); }
  static Conjunction bottom();
  static Conjunction of(std::initializer_list<LinearAtom> atoms);

  void insert(const LinearAtom& atom);
  void insert_all(const Conjunction& other);

  bool is_bottom() const { return bottom_; }
  bool is_true() const { return !bottom_ && literals_.empty(); }
  const std::vector<LinearAtom>& literals() const { return literals_; }
  bool contains(const LinearAtom& atom) const;
  std::set<std::string> variables() const;

  template <typename Lookup>
  bool evaluate(Lookup&& value_of) const {
    if (bottom_) return false;
    for (const auto& lit : literals_) {
      if (!lit.evaluate(value_of)) return false;
    }
    return true;
  }

  std::string to_string() const;

  bool operator==(const Conjunction& other) const = default;

 private:
  std::vector<LinearAtom> literals_;  // sorted, unique
  bool bottom_ = false;
};

// One entry of the replacement operator: occurrences of a variable are
// rewritten to a fresh variable; a constant entry contributes the literal
// `new == c` instead.
struct Replacement {
  static Replacement var(std::string old_name, std::string new_name) {
    return Replacement{false, std::move(old_name), 0, std::move(new_name)};
  }
  static Replacement constant(Int value, std::string new_name) {
    return Replacement{true, "", std::move(value), std::move(new_name)};
  }

  bool old_is_const = false;
  std::string old_var;
  Int old_const = 0;
  std::string new_var;
};

// Applies the replacements left to right. Throws SourceError when a
// replacement variable already occurs in `q`.
Conjunction substitute(const Conjunction& q, const std::vector<Replacement>& mapping);

enum class RefuteResult { Unsat, MaybeSat };

// Fourier-Motzkin refutation. Equalities are eliminated by substitution,
// disequalities split into two branches (capped at 2^12 branches, beyond
// which MaybeSat). Unsat over the rationals implies Unsat over the
// integers, so Unsat is trustworthy; MaybeSat admits integer-infeasible
// survivors such as {2x = 1}.
RefuteResult refute(const Conjunction& c);

enum class EntailResult { Proved, Unknown };

// Proved only if ctx implies q over the integers; realized as
// refute(ctx && !q). Unknown admits false negatives, never false
// positives.
EntailResult entails(const Conjunction& ctx, const LinearAtom& q);

// Conjunction of per-literal entailment.
bool entails_all(const Conjunction& ctx, const Conjunction& q);

// Drops literals entailed by the remaining ones; deterministic in
// canonical literal order.
Conjunction reduce(const Conjunction& c);

// Splits a term into (positives, negatives) so that `term <= 0` reads as
// `positives <= negatives`. Both sides have non-negative coefficients and
// constants; used by the text renderers.
std::pair<LinearTerm, LinearTerm> split_for_display(const LinearTerm& term);

}  // namespace actol
