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

#include "actol/parser.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "actol/diagnostics.hpp"

namespace actol {

namespace {

// ----------------------------------------------------------------- lexer

enum class Tok {
  Ident, Number,
  KwInt, KwIf, KwElse, KwWhile, KwInput, KwErr,
  Assign,   // :=
  Colon, Semi, Comma,
  LParen, RParen, LBrace, RBrace, LBracket, RBracket,
  Plus, Minus, Star, Slash,
  Lt, Le, Gt, Ge, EqEq, Ne,
  AndAnd, OrOr, Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  Lexer(const std::string& src, std::string filename)
      : src_(src), filename_(std::move(filename)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) break;
      const int line = line_, col = col_;
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          word += advance();
        }
        out.push_back({keyword(word), word, line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          num += advance();
        }
        out.push_back({Tok::Number, num, line, col});
        continue;
      }
      out.push_back(symbol(line, col));
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
  }

  static Tok keyword(const std::string& w) {
    if (w == "int") return Tok::KwInt;
    if (w == "if") return Tok::KwIf;
    if (w == "else") return Tok::KwElse;
    if (w == "while") return Tok::KwWhile;
    if (w == "input") return Tok::KwInput;
    if (w == "ERR") return Tok::KwErr;
    return Tok::Ident;
  }

  Token symbol(int line, int col) {
    auto two = [&](char a, char b) {
      return pos_ + 1 < src_.size() && src_[pos_] == a && src_[pos_ + 1] == b;
    };
    auto make2 = [&](Tok t) {
      std::string s;
      s += advance();
      s += advance();
      return Token{t, s, line, col};
    };
    auto make1 = [&](Tok t) {
      std::string s(1, advance());
      return Token{t, s, line, col};
    };
    if (two(':', '=')) return make2(Tok::Assign);
    if (two('=', '=')) return make2(Tok::EqEq);
    if (two('!', '=')) return make2(Tok::Ne);
    if (two('<', '=')) return make2(Tok::Le);
    if (two('>', '=')) return make2(Tok::Ge);
    if (two('&', '&')) return make2(Tok::AndAnd);
    if (two('|', '|')) return make2(Tok::OrOr);
    switch (src_[pos_]) {
      case ':': return make1(Tok::Colon);
      case ';': return make1(Tok::Semi);
      case ',': return make1(Tok::Comma);
      case '(': return make1(Tok::LParen);
      case ')': return make1(Tok::RParen);
      case '{': return make1(Tok::LBrace);
      case '}': return make1(Tok::RBrace);
      case '[': return make1(Tok::LBracket);
      case ']': return make1(Tok::RBracket);
      case '+': return make1(Tok::Plus);
      case '-': return make1(Tok::Minus);
      case '*': return make1(Tok::Star);
      case '/': return make1(Tok::Slash);
      case '<': return make1(Tok::Lt);
      case '>': return make1(Tok::Gt);
      case '!': return make1(Tok::Bang);
      default:
        throw SourceError(filename_, line, col,
                          std::string("unexpected character '") + src_[pos_] + "'");
    }
  }

  const std::string& src_;
  std::string filename_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ------------------------------------------------------------ CFA builder

struct Builder {
  int locations = 0;
  std::vector<Edge> edges;
  std::set<Location> errors;
  std::vector<LoopSite> loop_sites;

  Location fresh() { return locations++; }

  void emit(Location from, Statement stm, Location to) {
    edges.push_back(Edge{from, std::move(stm), to});
  }

  // Redirects every reference of `a` to `b`; `a` is always a fresh join
  // placeholder without an error mark.
  void merge(Location a, Location b) {
    if (a == b) return;
    for (auto& e : edges) {
      if (e.src == a) e.src = b;
      if (e.dst == a) e.dst = b;
    }
    for (auto& site : loop_sites) {
      if (site.header == a) site.header = b;
      if (site.body_start == a) site.body_start = b;
    }
  }
};

// ------------------------------------------------------------------ parser

class Parser {
 public:
  Parser(const std::string& src, std::string filename)
      : filename_(std::move(filename)), toks_(Lexer(src, filename_).run()) {}

  ParseResult run() {
    parse_decls();
    std::optional<Location> cur = builder_.fresh();  // initial location 0
    // Array declarations allocate storage, visible as one labeled edge
    // each; scalar declarations only introduce names.
    for (const auto& arr : array_order_) {
      Location to = builder_.fresh();
      std::string label = "int " + arr.name + "[" + to_string(arr.size) + "];";
      builder_.emit(*cur, Statement::skip(label), to);
      cur = to;
    }
    cur = parse_stmt_seq(cur, Tok::End);
    expect(Tok::End, "end of input");
    return finish();
  }

  Expr parse_bare_expression() {
    Expr e = parse_expr();
    expect(Tok::End, "end of expression");
    return e;
  }

  std::pair<Expr, std::pair<Cmp, Expr>> parse_bare_atom() {
    Expr lhs = parse_expr();
    Cmp op = expect_cmp();
    Expr rhs = parse_expr();
    expect(Tok::End, "end of atom");
    return {lhs, {op, rhs}};
  }

 private:
  // ---- token helpers

  const Token& peek(int off = 0) const {
    size_t i = std::min(pos_ + off, toks_.size() - 1);
    return toks_[i];
  }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok t, const std::string& what) {
    if (!at(t)) fail("expected " + what);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string context = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SourceError(filename_, t.line, t.col, msg + ", found " + context);
  }

  // ---- declarations

  void parse_decls() {
    while (at(Tok::KwInt)) {
      take();
      Token name = expect(Tok::Ident, "variable name");
      declare_check(name);
      if (accept(Tok::LBracket)) {
        Token size = expect(Tok::Number, "array size");
        expect(Tok::RBracket, "']'");
        expect(Tok::Semi, "';'");
        arrays_[name.text] = Int(size.text);
        array_order_.push_back({name.text, Int(size.text)});
      } else {
        expect(Tok::Semi, "';'");
        scalars_.push_back(name.text);
      }
    }
  }

  void declare_check(const Token& name) {
    if (name.text == "x" || name.text == "y" || name.text == "z") {
      throw SourceError(filename_, name.line, name.col,
                        "'" + name.text + "' is reserved for the hardware signature");
    }
    if (is_scalar(name.text) || arrays_.count(name.text)) {
      throw SourceError(filename_, name.line, name.col,
                        "duplicate declaration of '" + name.text + "'");
    }
  }

  bool is_scalar(const std::string& n) const {
    return std::find(scalars_.begin(), scalars_.end(), n) != scalars_.end();
  }

  void require_scalar(const Token& name) const {
    if (is_scalar(name.text)) return;
    if (arrays_.count(name.text)) {
      throw SourceError(filename_, name.line, name.col,
                        "'" + name.text + "' is an array and needs a subscript");
    }
    throw SourceError(filename_, name.line, name.col, "use of undeclared variable '" + name.text + "'");
  }

  // ---- statements

  std::optional<Location> parse_stmt_seq(std::optional<Location> cur, Tok terminator) {
    while (!at(terminator) && !at(Tok::End)) {
      if (!cur) {
        // Control cannot reach this statement; keep parsing for syntax
        // checking and drop the orphaned piece later.
        warnings_.push_back(filename_ + ":" + std::to_string(peek().line) +
                            ": unreachable code after ERR is removed");
        cur = builder_.fresh();
      }
      cur = parse_stmt(*cur);
    }
    return cur;
  }

  std::optional<Location> parse_block(Location from) {
    if (accept(Tok::LBrace)) {
      std::optional<Location> end = parse_stmt_seq(from, Tok::RBrace);
      expect(Tok::RBrace, "'}'");
      return end;
    }
    return parse_stmt(from);
  }

  std::optional<Location> parse_stmt(Location from) {
    if (at(Tok::KwErr)) {
      take();
      expect(Tok::Colon, "':'");
      expect(Tok::Semi, "';'");
      builder_.errors.insert(from);
      return std::nullopt;
    }
    if (at(Tok::KwIf)) return parse_if(from);
    if (at(Tok::KwWhile)) return parse_while(from);
    if (at(Tok::KwInt)) fail("declarations must precede statements");

    Token name = expect(Tok::Ident, "statement");
    if (accept(Tok::LBracket)) {
      // Array element write: bounds are asserted in the source; the write
      // itself has no modeled effect.
      if (!arrays_.count(name.text)) {
        throw SourceError(filename_, name.line, name.col,
                          "'" + name.text + "' is not a declared array");
      }
      Expr index = parse_expr();
      expect(Tok::RBracket, "']'");
      expect(Tok::Assign, "':='");
      Expr value = parse_expr();
      expect(Tok::Semi, "';'");
      std::string label =
          name.text + "[" + index.to_string() + "] := " + value.to_string() + ";";
      Location to = builder_.fresh();
      builder_.emit(from, Statement::skip(label), to);
      return to;
    }

    require_scalar(name);
    expect(Tok::Assign, "':='");
    Expr rhs = at(Tok::KwInput) ? parse_input_call() : parse_expr();
    expect(Tok::Semi, "';'");
    Location to = builder_.fresh();
    builder_.emit(from, Statement::assign(name.text, std::move(rhs)), to);
    return to;
  }

  Expr parse_input_call() {
    expect(Tok::KwInput, "'input'");
    expect(Tok::LParen, "'('");
    expect(Tok::RParen, "')'");
    return Expr::input();
  }

  std::optional<Location> parse_if(Location from) {
    take();  // if
    expect(Tok::LParen, "'('");
    BoolExpr cond = parse_bool();
    expect(Tok::RParen, "')'");

    Location then_start = builder_.fresh();
    builder_.emit(from, Statement::assume(cond), then_start);
    std::optional<Location> then_end = parse_block(then_start);

    BoolExpr neg = BoolExpr::negation(cond);
    if (accept(Tok::KwElse)) {
      Location else_start = builder_.fresh();
      builder_.emit(from, Statement::assume(std::move(neg)), else_start);
      std::optional<Location> else_end = parse_block(else_start);
      if (then_end && else_end) {
        builder_.merge(*else_end, *then_end);
        return then_end;
      }
      return then_end ? then_end : else_end;
    }
    if (then_end) {
      builder_.emit(from, Statement::assume(std::move(neg)), *then_end);
      return then_end;
    }
    Location join = builder_.fresh();
    builder_.emit(from, Statement::assume(std::move(neg)), join);
    return join;
  }

  std::optional<Location> parse_while(Location header) {
    Token kw = take();
    expect(Tok::LParen, "'('");
    BoolExpr cond = parse_bool();
    expect(Tok::RParen, "')'");

    Location body_start = builder_.fresh();
    Location exit = builder_.fresh();
    builder_.emit(header, Statement::assume(cond), body_start);
    builder_.emit(header, Statement::assume(BoolExpr::negation(cond)), exit);
    builder_.loop_sites.push_back(LoopSite{kw.line, header, body_start});

    std::optional<Location> body_end = parse_block(body_start);
    if (body_end) builder_.merge(*body_end, header);
    return exit;
  }

  // ---- expressions

  Expr parse_expr() { return parse_add(); }

  Expr parse_add() {
    Expr e = parse_mul();
    for (;;) {
      if (accept(Tok::Plus)) {
        e = Expr::binary(BinOp::Add, std::move(e), parse_mul());
      } else if (accept(Tok::Minus)) {
        e = Expr::binary(BinOp::Sub, std::move(e), parse_mul());
      } else {
        return e;
      }
    }
  }

  Expr parse_mul() {
    Expr e = parse_unary();
    for (;;) {
      if (accept(Tok::Star)) {
        e = Expr::binary(BinOp::Mul, std::move(e), parse_unary());
      } else if (accept(Tok::Slash)) {
        e = Expr::binary(BinOp::Div, std::move(e), parse_unary());
      } else {
        return e;
      }
    }
  }

  Expr parse_unary() {
    if (accept(Tok::Minus)) {
      return Expr::binary(BinOp::Sub, Expr::constant(0), parse_unary());
    }
    return parse_primary();
  }

  Expr parse_primary() {
    if (at(Tok::Number)) return Expr::constant(Int(take().text));
    if (at(Tok::Ident)) {
      Token name = take();
      if (at(Tok::LBracket)) {
        throw SourceError(filename_, name.line, name.col,
                          "array reads are not supported");
      }
      if (checked_) require_scalar(name);
      return Expr::variable(name.text);
    }
    if (accept(Tok::LParen)) {
      Expr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::KwInput)) fail("input() is only allowed as a whole assignment");
    fail("expected expression");
  }

  // ---- boolean expressions

  BoolExpr parse_bool() { return parse_or(); }

  BoolExpr parse_or() {
    BoolExpr e = parse_and();
    while (accept(Tok::OrOr)) e = BoolExpr::disj(std::move(e), parse_and());
    return e;
  }

  BoolExpr parse_and() {
    BoolExpr e = parse_bfactor();
    while (accept(Tok::AndAnd)) e = BoolExpr::conj(std::move(e), parse_bfactor());
    return e;
  }

  BoolExpr parse_bfactor() {
    if (accept(Tok::Bang)) return BoolExpr::negation(parse_bfactor());
    if (at(Tok::LParen)) {
      // Could open a boolean group or an arithmetic operand; try the
      // boolean reading first and rewind on failure.
      size_t saved = pos_;
      take();
      try {
        BoolExpr inner = parse_bool();
        expect(Tok::RParen, "')'");
        return inner;
      } catch (const SourceError&) {
        pos_ = saved;
      }
    }
    Expr lhs = parse_expr();
    Cmp op = expect_cmp();
    Expr rhs = parse_expr();
    return BoolExpr::cmp(op, std::move(lhs), std::move(rhs));
  }

  Cmp expect_cmp() {
    switch (peek().kind) {
      case Tok::Lt: take(); return Cmp::Lt;
      case Tok::Le: take(); return Cmp::Le;
      case Tok::Gt: take(); return Cmp::Gt;
      case Tok::Ge: take(); return Cmp::Ge;
      case Tok::EqEq: take(); return Cmp::Eq;
      case Tok::Ne: take(); return Cmp::Ne;
      default: fail("expected comparison operator");
    }
  }

  // ---- finalization

  ParseResult finish() {
    // Keep only locations reachable from the entry, renumbering in
    // breadth-first order.
    std::vector<int> remap(builder_.locations, -1);
    std::deque<Location> queue{0};
    remap[0] = 0;
    int next = 1;
    auto out = [&] {
      std::vector<std::vector<int>> idx(builder_.locations);
      for (size_t i = 0; i < builder_.edges.size(); ++i) {
        idx[builder_.edges[i].src].push_back(int(i));
      }
      return idx;
    }();
    while (!queue.empty()) {
      Location l = queue.front();
      queue.pop_front();
      for (int ei : out[l]) {
        Location t = builder_.edges[ei].dst;
        if (remap[t] == -1) {
          remap[t] = next++;
          queue.push_back(t);
        }
      }
    }

    Cfa cfa;
    cfa.num_locations = next;
    cfa.initial = 0;
    for (auto& e : builder_.edges) {
      if (remap[e.src] == -1) continue;  // orphaned by ERR
      cfa.edges.push_back(Edge{remap[e.src], std::move(e.stm), remap[e.dst]});
    }
    for (Location l : builder_.errors) {
      if (remap[l] != -1) cfa.errors.insert(remap[l]);
    }
    for (const auto& site : builder_.loop_sites) {
      if (remap[site.header] != -1) {
        cfa.loop_sites.push_back(LoopSite{site.source_line, remap[site.header],
                                          remap[site.body_start]});
      }
    }
    cfa.variables = scalars_;
    cfa.arrays = array_order_;
    cfa.check_well_formed();
    return ParseResult{std::move(cfa), std::move(warnings_)};
  }

 public:
  void set_unchecked() { checked_ = false; }

 private:
  std::string filename_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Builder builder_;
  std::vector<std::string> scalars_;
  std::map<std::string, Int> arrays_;
  std::vector<ArrayDecl> array_order_;
  std::vector<std::string> warnings_;
  bool checked_ = true;
};

}  // namespace

ParseResult parse_program(const std::string& source, const std::string& filename) {
  Parser p(source, filename);
  return p.run();
}

Expr parse_expression_text(const std::string& text, const std::string& filename) {
  Parser p(text, filename);
  p.set_unchecked();
  return p.parse_bare_expression();
}

LinearAtom parse_atom_text(const std::string& text, const std::string& filename) {
  Parser p(text, filename);
  p.set_unchecked();
  auto [lhs, rest] = p.parse_bare_atom();
  auto l = lhs.to_linear();
  auto r = rest.second.to_linear();
  if (!l || !r) throw SourceError(filename, 1, 1, "atom is not linear");
  return LinearAtom(*l, rest.first, *r);
}

std::vector<LinearAtom> parse_predicates(const std::string& text, const Cfa& cfa,
                                         const std::string& filename) {
  std::vector<LinearAtom> atoms;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    LinearAtom atom = [&] {
      try {
        return parse_atom_text(body, filename);
      } catch (const SourceError& e) {
        throw SourceError(filename, lineno, 1, e.what());
      }
    }();
    std::set<std::string> vars;
    atom.collect_variables(vars);
    for (const auto& v : vars) {
      if (!cfa.has_variable(v)) {
        throw SourceError(filename, lineno, 1, "predicate uses undeclared variable '" + v + "'");
      }
    }
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

std::vector<RankingSpec> parse_ranking(const std::string& text, const Cfa& cfa,
                                       const std::string& filename) {
  std::vector<RankingSpec> specs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(body);
    std::string kw;
    int loop_line = 0;
    ls >> kw >> loop_line;
    std::string rank_kw;
    ls >> rank_kw;
    if (kw != "at" || loop_line <= 0 || rank_kw != "rank") {
      throw SourceError(filename, lineno, 1, "expected 'at <line> rank <expr>'");
    }
    std::string expr_text;
    std::getline(ls, expr_text);
    RankingSpec spec;
    spec.loop_line = loop_line;
    spec.spec_line = lineno;
    try {
      spec.rank = parse_expression_text(expr_text, filename);
    } catch (const SourceError& e) {
      throw SourceError(filename, lineno, 1, e.what());
    }
    std::set<std::string> vars;
    spec.rank.collect_variables(vars);
    for (const auto& v : vars) {
      if (!cfa.has_variable(v)) {
        throw SourceError(filename, lineno, 1,
                          "ranking expression uses undeclared variable '" + v + "'");
      }
    }
    if (!spec.rank.to_linear()) {
      throw SourceError(filename, lineno, 1, "ranking expression must be linear");
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace actol
