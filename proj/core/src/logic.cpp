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

#include "actol/logic.hpp"

#include <algorithm>
#include <cassert>

#include "actol/diagnostics.hpp"

namespace actol {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- LinearTerm

LinearTerm LinearTerm::variable(const std::string& name, Int coeff) {
  LinearTerm t;
  if (coeff != 0) t.coeffs_[name] = std::move(coeff);
  return t;
}

LinearTerm& LinearTerm::operator+=(const LinearTerm& other) {
  for (const auto& [var, coeff] : other.coeffs_) {
    Int& slot = coeffs_[var];
    slot += coeff;
    if (slot == 0) coeffs_.erase(var);
  }
  constant_ += other.constant_;
  return *this;
}

LinearTerm& LinearTerm::operator-=(const LinearTerm& other) { return *this += other.scaled(-1); }

LinearTerm LinearTerm::scaled(const Int& k) const {
  LinearTerm t;
  if (k == 0) return t;
  for (const auto& [var, coeff] : coeffs_) t.coeffs_[var] = coeff * k;
  t.constant_ = constant_ * k;
  return t;
}

Int LinearTerm::coefficient(const std::string& var) const {
  auto it = coeffs_.find(var);
  return it == coeffs_.end() ? Int(0) : it->second;
}

LinearTerm LinearTerm::renamed(const std::string& from, const std::string& to) const {
  auto it = coeffs_.find(from);
  if (it == coeffs_.end()) return *this;
  LinearTerm t = *this;
  Int c = it->second;
  t.coeffs_.erase(from);
  Int& slot = t.coeffs_[to];
  slot += c;
  if (slot == 0) t.coeffs_.erase(to);
  return t;
}

std::strong_ordering LinearTerm::operator<=>(const LinearTerm& other) const {
  auto a = coeffs_.begin(), b = other.coeffs_.begin();
  for (; a != coeffs_.end() && b != other.coeffs_.end(); ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    if (a->second < b->second) return std::strong_ordering::less;
    if (a->second > b->second) return std::strong_ordering::greater;
  }
  if (a != coeffs_.end()) return std::strong_ordering::greater;
  if (b != other.coeffs_.end()) return std::strong_ordering::less;
  if (constant_ < other.constant_) return std::strong_ordering::less;
  if (constant_ > other.constant_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- LinearAtom

LinearAtom::LinearAtom(const LinearTerm& lhs, Cmp cmp, const LinearTerm& rhs)
    : rel_(Rel::Le), term_(lhs - rhs) {
  switch (cmp) {
    case Cmp::Le:
      break;
    case Cmp::Lt:
      term_ += LinearTerm(1);
      break;
    case Cmp::Ge:
      term_ = -term_;
      break;
    case Cmp::Gt:
      term_ = -term_;
      term_ += LinearTerm(1);
      break;
    case Cmp::Eq:
      rel_ = Rel::Eq;
      break;
    case Cmp::Ne:
      rel_ = Rel::Ne;
      break;
  }
  canonicalize();
}

LinearAtom::LinearAtom(Rel rel, LinearTerm term) : rel_(rel), term_(std::move(term)) {
  canonicalize();
}

void LinearAtom::canonicalize() {
  const auto& coeffs = term_.coefficients();
  if (coeffs.empty()) return;
  // Equations are sign-symmetric: fix the leading coefficient positive.
  if (rel_ != Rel::Le && coeffs.begin()->second < 0) term_ = -term_;
  // Pure rescaling (no rounding): divide out a common factor of all
  // coefficients and the constant.
  Int g = 0;
  for (const auto& [var, c] : coeffs) g = gcd_int(g, c);
  g = gcd_int(g, term_.constant());
  if (g > 1) {
    LinearTerm scaled;
    for (const auto& [var, c] : coeffs) scaled += LinearTerm::variable(var, c / g);
    scaled += LinearTerm(term_.constant() / g);
    term_ = scaled;
  }
}

std::optional<bool> LinearAtom::constant_value() const {
  if (!term_.is_constant()) return std::nullopt;
  const Int& k = term_.constant();
  switch (rel_) {
    case Rel::Le: return k <= 0;
    case Rel::Eq: return k == 0;
    case Rel::Ne: return k != 0;
  }
  return std::nullopt;
}

LinearAtom LinearAtom::complement() const {
  switch (rel_) {
    case Rel::Le: {
      // not (t <= 0)  <=>  t >= 1  <=>  -t + 1 <= 0
      LinearTerm t = -term_;
      t += LinearTerm(1);
      return LinearAtom(Rel::Le, std::move(t));
    }
    case Rel::Eq: return LinearAtom(Rel::Ne, term_);
    case Rel::Ne: return LinearAtom(Rel::Eq, term_);
  }
  return *this;
}

void LinearAtom::collect_variables(std::set<std::string>& out) const {
  for (const auto& [var, c] : term_.coefficients()) out.insert(var);
}

LinearAtom LinearAtom::renamed(const std::string& from, const std::string& to) const {
  return LinearAtom(rel_, term_.renamed(from, to));
}

std::strong_ordering LinearAtom::operator<=>(const LinearAtom& other) const {
  if (auto c = rel_ <=> other.rel_; c != 0) return c;
  return term_ <=> other.term_;
}

std::pair<LinearTerm, LinearTerm> split_for_display(const LinearTerm& term) {
  LinearTerm pos, neg;
  for (const auto& [var, c] : term.coefficients()) {
    if (c > 0) {
      pos += LinearTerm::variable(var, c);
    } else {
      neg += LinearTerm::variable(var, -c);
    }
  }
  if (term.constant() > 0) {
    pos += LinearTerm(term.constant());
  } else if (term.constant() < 0) {
    neg += LinearTerm(-term.constant());
  }
  return {pos, neg};
}

namespace {

std::string render_side(const LinearTerm& t) {
  std::string out;
  for (const auto& [var, c] : t.coefficients()) {
    if (!out.empty()) out += " + ";
    if (c == 1) {
      out += var;
    } else {
      out += to_string(c) + "*" + var;
    }
  }
  if (t.constant() != 0 || out.empty()) {
    if (!out.empty()) out += " + ";
    out += to_string(t.constant());
  }
  return out;
}

}  // namespace

std::string LinearAtom::to_string() const {
  auto [pos, neg] = split_for_display(term_);
  std::string lhs = render_side(pos);
  std::string rhs = render_side(neg);
  switch (rel_) {
    case Rel::Le: return lhs + " <= " + rhs;
    case Rel::Eq: return lhs + " == " + rhs;
    case Rel::Ne: return lhs + " != " + rhs;
  }
  return "";
}

// --------------------------------------------------------------- Conjunction

Conjunction Conjunction::bottom() {
  Conjunction c;
  c.bottom_ = true;
  return c;
}

Conjunction Conjunction::of(std::initializer_list<LinearAtom> atoms) {
  Conjunction c;
  for (const auto& a : atoms) c.insert(a);
  return c;
}

void Conjunction::insert(const LinearAtom& atom) {
  if (bottom_) return;
  if (auto v = atom.constant_value()) {
    if (!*v) {
      literals_.clear();
      bottom_ = true;
    }
    return;
  }
  if (contains(atom)) return;
  if (contains(atom.complement())) {
    literals_.clear();
    bottom_ = true;
    return;
  }
  literals_.insert(std::upper_bound(literals_.begin(), literals_.end(), atom), atom);
}

void Conjunction::insert_all(const Conjunction& other) {
  if (other.is_bottom()) {
    literals_.clear();
    bottom_ = true;
    return;
  }
  for (const auto& lit : other.literals_) insert(lit);
}

bool Conjunction::contains(const LinearAtom& atom) const {
  return std::binary_search(literals_.begin(), literals_.end(), atom);
}

std::set<std::string> Conjunction::variables() const {
  std::set<std::string> out;
  for (const auto& lit : literals_) lit.collect_variables(out);
  return out;
}

std::string Conjunction::to_string() const {
  if (bottom_) return "false";
  if (literals_.empty()) return "true";
  std::string out;
  for (const auto& lit : literals_) {
    if (!out.empty()) out += " && ";
    out += lit.to_string();
  }
  return out;
}

// ---------------------------------------------------------------- substitute

Conjunction substitute(const Conjunction& q, const std::vector<Replacement>& mapping) {
  if (q.is_bottom()) return q;
  std::set<std::string> vars = q.variables();
  for (const auto& r : mapping) {
    if (vars.count(r.new_var)) {
      throw SourceError("replacement variable '" + r.new_var + "' already occurs in the formula");
    }
  }
  Conjunction out = q;
  for (const auto& r : mapping) {
    if (r.old_is_const) {
      LinearTerm t = LinearTerm::variable(r.new_var) - LinearTerm(r.old_const);
      out.insert(LinearAtom(LinearAtom::Rel::Eq, std::move(t)));
    } else {
      Conjunction renamed;
      for (const auto& lit : out.literals()) renamed.insert(lit.renamed(r.old_var, r.new_var));
      if (out.is_bottom()) renamed = Conjunction::bottom();
      out = std::move(renamed);
    }
  }
  return out;
}

// -------------------------------------------------------------------- refute

namespace {

constexpr int kMaxNeSplits = 12;        // 2^12 branches
constexpr size_t kMaxBranchAtoms = 20000;  // growth safety valve

struct BranchAtom {
  bool is_eq;       // otherwise: term <= 0
  LinearTerm term;
};

// Divides a derived inequality by the gcd of its coefficients and
// constant when that is exact; keeps growth in check without rounding.
void rescale(LinearTerm& t) {
  Int g = 0;
  for (const auto& [var, c] : t.coefficients()) g = gcd_int(g, c);
  if (g == 0) return;
  g = gcd_int(g, t.constant());
  if (g <= 1) return;
  LinearTerm scaled;
  for (const auto& [var, c] : t.coefficients()) scaled += LinearTerm::variable(var, c / g);
  scaled += LinearTerm(t.constant() / g);
  t = scaled;
}

// Returns true when the branch is refuted.
bool refute_branch(std::vector<BranchAtom> atoms) {
  // Equality elimination by exact substitution.
  for (;;) {
    auto eq = std::find_if(atoms.begin(), atoms.end(), [](const BranchAtom& a) {
      return a.is_eq && !a.term.is_constant();
    });
    if (eq == atoms.end()) break;
    LinearTerm pivot = eq->term;
    const std::string var = pivot.coefficients().begin()->first;
    if (pivot.coefficient(var) < 0) pivot = -pivot;
    const Int c = pivot.coefficient(var);
    std::vector<BranchAtom> next;
    next.reserve(atoms.size() - 1);
    for (auto it = atoms.begin(); it != atoms.end(); ++it) {
      if (it == eq) continue;
      Int d = it->term.coefficient(var);
      if (d == 0) {
        next.push_back(std::move(*it));
        continue;
      }
      // c > 0, so scaling the inequality by c preserves direction.
      LinearTerm combined = it->term.scaled(c) - pivot.scaled(d);
      rescale(combined);
      next.push_back(BranchAtom{it->is_eq, std::move(combined)});
    }
    atoms = std::move(next);
  }

  // Constant equalities and trivial inequalities.
  std::vector<LinearTerm> ineqs;
  for (auto& a : atoms) {
    if (a.term.is_constant()) {
      const Int& k = a.term.constant();
      if (a.is_eq ? (k != 0) : (k > 0)) return true;
      continue;
    }
    if (a.is_eq) {
      // Unreachable after elimination, but keep the sound reading.
      continue;
    }
    ineqs.push_back(std::move(a.term));
  }

  // Variable elimination.
  for (;;) {
    std::set<std::string> vars;
    for (const auto& t : ineqs) {
      for (const auto& [v, c] : t.coefficients()) vars.insert(v);
    }
    if (vars.empty()) break;
    const std::string var = *vars.begin();

    std::vector<LinearTerm> lowers, uppers, rest;
    for (auto& t : ineqs) {
      Int c = t.coefficient(var);
      if (c > 0) {
        uppers.push_back(std::move(t));
      } else if (c < 0) {
        lowers.push_back(std::move(t));
      } else {
        rest.push_back(std::move(t));
      }
    }
    for (const auto& lo : lowers) {
      const Int cl = -lo.coefficient(var);  // > 0
      for (const auto& up : uppers) {
        const Int cu = up.coefficient(var);  // > 0
        LinearTerm combined = lo.scaled(cu) + up.scaled(cl);
        rescale(combined);
        if (combined.is_constant()) {
          if (combined.constant() > 0) return true;
          continue;
        }
        rest.push_back(std::move(combined));
      }
      if (rest.size() > kMaxBranchAtoms) return false;  // give up soundly
    }
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    ineqs = std::move(rest);
  }
  return false;
}

}  // namespace

RefuteResult refute(const Conjunction& c) {
  if (c.is_bottom()) return RefuteResult::Unsat;
  if (c.is_true()) return RefuteResult::MaybeSat;

  std::vector<BranchAtom> base;
  std::vector<LinearTerm> splits;  // disequalities: term != 0
  for (const auto& lit : c.literals()) {
    switch (lit.rel()) {
      case LinearAtom::Rel::Le:
        base.push_back(BranchAtom{false, lit.term()});
        break;
      case LinearAtom::Rel::Eq:
        base.push_back(BranchAtom{true, lit.term()});
        break;
      case LinearAtom::Rel::Ne:
        splits.push_back(lit.term());
        break;
    }
  }
  if (splits.size() > kMaxNeSplits) return RefuteResult::MaybeSat;

  const size_t branches = size_t(1) << splits.size();
  for (size_t mask = 0; mask < branches; ++mask) {
    std::vector<BranchAtom> atoms = base;
    for (size_t i = 0; i < splits.size(); ++i) {
      // t != 0 splits into (t <= -1) | (-t <= -1)
      LinearTerm t = (mask >> i) & 1 ? -splits[i] : splits[i];
      t += LinearTerm(1);
      atoms.push_back(BranchAtom{false, std::move(t)});
    }
    if (!refute_branch(std::move(atoms))) return RefuteResult::MaybeSat;
  }
  return RefuteResult::Unsat;
}

// ------------------------------------------------------------------- entails

EntailResult entails(const Conjunction& ctx, const LinearAtom& q) {
  if (ctx.is_bottom()) return EntailResult::Proved;
  if (auto v = q.constant_value()) return *v ? EntailResult::Proved : EntailResult::Unknown;
  Conjunction query = ctx;
  query.insert(q.complement());
  return refute(query) == RefuteResult::Unsat ? EntailResult::Proved : EntailResult::Unknown;
}

bool entails_all(const Conjunction& ctx, const Conjunction& q) {
  if (q.is_bottom()) return ctx.is_bottom();
  for (const auto& lit : q.literals()) {
    if (entails(ctx, lit) != EntailResult::Proved) return false;
  }
  return true;
}

Conjunction reduce(const Conjunction& c) {
  if (c.is_bottom() || c.is_true()) return c;
  std::vector<LinearAtom> kept = c.literals();
  for (size_t i = 0; i < kept.size();) {
    Conjunction rest;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j != i) rest.insert(kept[j]);
    }
    if (entails(rest, kept[i]) == EntailResult::Proved) {
      kept.erase(kept.begin() + i);
    } else {
      ++i;
    }
  }
  Conjunction out;
  for (const auto& lit : kept) out.insert(lit);
  return out;
}

}  // namespace actol
