#pragma once

// Recursive-descent parser for scripts.
//
//   statement := 'ring' NAME '=' expr | 'use' expr | NAME '=' expr | expr
//   expr      := 'for' NAME 'from' expr 'to' expr 'list' expr | equality
//   equality  := range ['==' range]
//   range     := sum ['..' sum]
//   sum       := product {('+' | '-') product}
//   product   := unary {('*' | '/' | '**') unary}
//   unary     := '-' unary | power
//   power     := apply ['^' unary]
//   apply     := BUILTIN '(' args ')' {'#' index} | BUILTIN apply | postfix
//   postfix   := primary {'#' index}
//   index     := ['-'] primary
//   primary   := NUMBER | NAME | STRING | '(' expr ')' | '{' args '}' | ring
//   ring      := ('QQ' | 'ZZ' '/' NUMBER) '[' vars ']' [ORDER]
//
// Quoted strings use the polynomial shorthand: single-letter variables,
// juxtaposition for products, trailing digits as exponents (`xz2` = x*z^2),
// commas between generators and semicolons between matrix rows.

#include <algorithm>
#include <iterator>
#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locus/script/ast.hpp"
#include "locus/script/lexer.hpp"

namespace locus::script {

inline constexpr std::string_view kBuiltins[] = {
    "ideal",        "matrix",        "mutableMatrix", "localRing",   "localize",
    "promote",      "liftUp",        "res",           "resolution",  "prune",
    "pruneComplex", "pruneDiff",     "pruneUnit",     "syz",         "mingens",
    "minpres",      "minimalPresentation", "length",  "hsf",         "hilbertSamuelFunction",
    "betti",        "coker",         "cokernel",      "image",       "subquotient",
    "presentation", "tensor",        "gb",            "transpose",   "multiplicity",
    "modulo",       "gens",          "relations",     "isUnit",      "monomialCurveIdeal",
    "ranks",        "numgens",       "ring",          "isMinimal",   "numrows",
    "numcols",      "entries"};

inline bool is_builtin(std::string_view name) {
  return std::find(std::begin(kBuiltins), std::end(kBuiltins), name) != std::end(kBuiltins);
}

inline bool is_order_name(std::string_view s) {
  return s == "grevlex" || s == "lex" || s == "glex";
}

namespace detail {

inline ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

inline ExprPtr make_binary(Pos pos, std::string op, ExprPtr l, ExprPtr r) {
  Expr e{Expr::Kind::Binary, pos, std::move(op), {std::move(l), std::move(r)}, {}, {}, {}};
  return make(std::move(e));
}

/// Parser for the quoted polynomial shorthand.
class ShorthandParser {
 public:
  ShorthandParser(std::string_view text, Pos origin) : s_(text), origin_(origin) {}

  std::vector<std::vector<ExprPtr>> parse_rows() {
    std::vector<std::vector<ExprPtr>> rows;
    for (;;) {
      std::vector<ExprPtr> row;
      for (;;) {
        row.push_back(poly());
        skip_space();
        if (peek() != ',') break;
        ++i_;
      }
      rows.push_back(std::move(row));
      skip_space();
      if (peek() != ';') break;
      ++i_;
    }
    skip_space();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "' in polynomial");
    return rows;
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  Pos here() const { return Pos{origin_.line, origin_.col + 1 + static_cast<int>(i_)}; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(here(), msg); }

  bool starts_factor() {
    skip_space();
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  ExprPtr poly() {
    skip_space();
    Pos start = here();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++i_;
    }
    if (!starts_factor()) fail(peek() == '\0' || peek() == ',' || peek() == ';' ? "empty generator"
                                                                                  : "expected a term");
    ExprPtr acc = term();
    if (negate) acc = make(Expr{Expr::Kind::Unary, start, "-", {acc}, {}, {}, {}});
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      Pos p = here();
      ++i_;
      if (!starts_factor()) fail("expected a term");
      acc = make_binary(p, std::string(1, c), acc, term());
    }
    return acc;
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    for (;;) {
      skip_space();
      Pos p = here();
      if (peek() == '*') {
        ++i_;
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      acc = make_binary(p, "*", acc, factor());
    }
    return acc;
  }

  ExprPtr factor() {
    skip_space();
    Pos p = here();
    ExprPtr base;
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i_;
      base = make(Expr{Expr::Kind::Name, p, std::string(1, c), {}, {}, {}, {}});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = make(Expr{Expr::Kind::Number, p, digits(), {}, {}, {}, {}});
      return base;
    } else if (c == '(') {
      ++i_;
      base = poly();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++i_;
    } else {
      fail("expected a factor");
    }
    Pos ep = here();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto e = make(Expr{Expr::Kind::Number, ep, digits(), {}, {}, {}, {}});
      return make_binary(ep, "^", base, e);
    }
    if (peek() == '^') {
      ++i_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      auto e = make(Expr{Expr::Kind::Number, here(), digits(), {}, {}, {}, {}});
      return make_binary(ep, "^", base, e);
    }
    return base;
  }

  std::string digits() {
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    std::string d(s_.substr(i_, j - i_));
    i_ = j;
    return d;
  }

  std::string_view s_;
  Pos origin_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::vector<std::vector<ExprPtr>> parse_shorthand(std::string_view text, Pos origin = {}) {
  return detail::ShorthandParser(text, origin).parse_rows();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  Script parse_script() {
    Script s;
    for (;;) {
      skip_separators();
      if (at_end()) break;
      s.statements.push_back(statement());
    }
    return s;
  }

 private:
  using K = Token::Kind;

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  bool at_end() const { return peek().kind == K::End; }
  bool is_op(const char* op, std::size_t k = 0) const {
    return peek(k).kind == K::Op && peek(k).text == op;
  }
  bool is_ident(const char* id, std::size_t k = 0) const {
    return peek(k).kind == K::Ident && peek(k).text == id;
  }
  const Token& next() { return t_[std::min(p_++, t_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& tok = peek();
    std::string found = tok.kind == K::End ? "end of input"
                        : tok.kind == K::Newline ? "end of line"
                                                 : "'" + tok.text + "'";
    throw SyntaxError(tok.pos, msg + ", found " + found);
  }
  void expect_op(const char* op) {
    if (!is_op(op)) fail(std::string("expected '") + op + "'");
    ++p_;
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != K::Ident) fail(std::string("expected ") + what);
    return next().text;
  }
  void skip_separators() {
    while (peek().kind == K::Newline || is_op(";")) ++p_;
  }

  Statement statement() {
    Statement s;
    s.pos = peek().pos;
    if (is_ident("ring") && peek(1).kind == K::Ident && is_op("=", 2)) {
      ++p_;
      s.kind = Statement::Kind::Assign;
      s.ring_keyword = true;
      s.name = next().text;
      ++p_;
      s.expr = expr();
      if (s.expr->kind != Expr::Kind::RingLit) {
        throw SyntaxError(s.expr->pos, "expected a ring such as QQ[x,y] after 'ring NAME ='");
      }
    } else if (is_ident("use") && peek(1).kind != K::Newline && !is_op("=", 1)) {
      ++p_;
      s.kind = Statement::Kind::Use;
      s.expr = expr();
    } else if (peek().kind == K::Ident && is_op("=", 1)) {
      s.kind = Statement::Kind::Assign;
      s.name = next().text;
      ++p_;
      s.expr = expr();
    } else {
      s.expr = expr();
    }
    if (is_op(";")) {
      s.suppressed = true;
      ++p_;
    } else if (peek().kind != K::Newline && !at_end()) {
      fail("expected end of statement");
    }
    return s;
  }

  ExprPtr expr() {
    if (is_ident("for")) {
      Pos pos = next().pos;
      std::string var = expect_ident("a loop variable");
      if (!is_ident("from")) fail("expected 'from'");
      ++p_;
      ExprPtr lo = equality();
      if (!is_ident("to")) fail("expected 'to'");
      ++p_;
      ExprPtr hi = equality();
      if (!is_ident("list")) fail("expected 'list'");
      ++p_;
      ExprPtr body = expr();
      return detail::make(Expr{Expr::Kind::For, pos, var, {lo, hi, body}, {}, {}, {}});
    }
    return equality();
  }

  ExprPtr equality() {
    ExprPtr l = range();
    if (is_op("==")) {
      Pos pos = next().pos;
      l = detail::make_binary(pos, "==", l, range());
    }
    return l;
  }

  ExprPtr range() {
    ExprPtr l = sum();
    if (is_op("..")) {
      Pos pos = next().pos;
      l = detail::make_binary(pos, "..", l, sum());
    }
    return l;
  }

  ExprPtr sum() {
    ExprPtr l = product();
    while (is_op("+") || is_op("-")) {
      Token op = next();
      l = detail::make_binary(op.pos, op.text, l, product());
    }
    return l;
  }

  ExprPtr product() {
    ExprPtr l = unary();
    while (is_op("*") || is_op("/") || is_op("**")) {
      Token op = next();
      l = detail::make_binary(op.pos, op.text, l, unary());
    }
    return l;
  }

  ExprPtr unary() {
    if (is_op("-")) {
      Pos pos = next().pos;
      return detail::make(Expr{Expr::Kind::Unary, pos, "-", {unary()}, {}, {}, {}});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = apply();
    if (is_op("^")) {
      Pos pos = next().pos;
      return detail::make_binary(pos, "^", base, unary());
    }
    return base;
  }

  bool starts_argument() const {
    const Token& t = peek();
    if (t.kind == K::Number || t.kind == K::String) return true;
    if (t.kind == K::Ident) return !is_ident("from") && !is_ident("to") && !is_ident("list");
    return is_op("(") || is_op("{");
  }

  ExprPtr apply() {
    if (peek().kind == K::Ident && is_builtin(peek().text) && !is_ring_start()) {
      std::size_t save = p_;
      Token name = next();
      if (is_op("(")) {
        ++p_;
        auto args = arguments(")");
        ExprPtr call = detail::make(Expr{Expr::Kind::Call, name.pos, name.text, std::move(args), {}, {}, {}});
        return postfix_tail(call);
      }
      if (starts_argument()) {
        ExprPtr arg = apply();
        return detail::make(Expr{Expr::Kind::Call, name.pos, name.text, {arg}, {}, {}, {}});
      }
      p_ = save;
    }
    return postfix_tail(primary());
  }

  ExprPtr postfix_tail(ExprPtr e) {
    while (is_op("#")) {
      Pos pos = next().pos;
      ExprPtr idx;
      if (is_op("-")) {
        Pos neg = next().pos;
        idx = detail::make(Expr{Expr::Kind::Unary, neg, "-", {primary()}, {}, {}, {}});
      } else {
        idx = primary();
      }
      e = detail::make(Expr{Expr::Kind::Index, pos, "#", {e, idx}, {}, {}, {}});
    }
    return e;
  }

  std::vector<ExprPtr> arguments(const char* close) {
    std::vector<ExprPtr> args;
    if (is_op(close)) {
      ++p_;
      return args;
    }
    for (;;) {
      args.push_back(expr());
      if (is_op(",")) {
        ++p_;
        continue;
      }
      expect_op(close);
      return args;
    }
  }

  bool is_ring_start() const {
    if (is_ident("QQ") && is_op("[", 1)) return true;
    return is_ident("ZZ") && is_op("/", 1) && peek(2).kind == K::Number && is_op("[", 3);
  }

  ExprPtr ring_literal() {
    Pos pos = peek().pos;
    std::string field = next().text;
    if (field == "ZZ") {
      ++p_;
      field += "/" + next().text;
    }
    expect_op("[");
    std::vector<std::string> vars;
    if (!is_op("]")) {
      for (;;) {
        Pos vpos = peek().pos;
        if (is_ident("vars") && is_op("(", 1)) {
          p_ += 2;
          if (peek().kind != K::Number) fail("expected a number");
          int lo = std::stoi(next().text);
          expect_op("..");
          if (peek().kind != K::Number) fail("expected a number");
          int hi = std::stoi(next().text);
          expect_op(")");
          if (hi < lo || hi >= 52) throw SyntaxError(vpos, "variable range out of bounds");
          for (int k = lo; k <= hi; ++k) vars.push_back(letter_name(k));
        } else {
          std::string v = expect_ident("a variable name");
          if (is_op("..")) {
            ++p_;
            std::string w = expect_ident("a variable name");
            if (v.size() != 1 || w.size() != 1 || !std::isalpha(static_cast<unsigned char>(v[0])) ||
                w[0] < v[0]) {
              throw SyntaxError(vpos, "a variable range must run between single letters");
            }
            for (char ch = v[0]; ch <= w[0]; ++ch) vars.push_back(std::string(1, ch));
          } else {
            vars.push_back(v);
          }
        }
        if (is_op(",")) {
          ++p_;
          continue;
        }
        break;
      }
    }
    expect_op("]");
    std::string order;
    if (peek().kind == K::Ident && is_order_name(peek().text)) order = next().text;
    Expr e{Expr::Kind::RingLit, pos, field, {}, {}, std::move(vars), std::move(order)};
    return detail::make(std::move(e));
  }

  static std::string letter_name(int k) {
    return std::string(1, k < 26 ? static_cast<char>('a' + k) : static_cast<char>('A' + k - 26));
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case K::Number: {
        Token n = next();
        return detail::make(Expr{Expr::Kind::Number, n.pos, n.text, {}, {}, {}, {}});
      }
      case K::String: {
        Token s = next();
        auto rows = parse_shorthand(s.text, s.pos);
        return detail::make(Expr{Expr::Kind::Shorthand, s.pos, s.text, {}, std::move(rows), {}, {}});
      }
      case K::Ident: {
        if (is_ring_start()) return ring_literal();
        if (is_ident("for") || is_ident("from") || is_ident("to") || is_ident("list")) {
          fail("unexpected keyword");
        }
        Token n = next();
        return detail::make(Expr{Expr::Kind::Name, n.pos, n.text, {}, {}, {}, {}});
      }
      case K::Op:
        if (t.text == "(") {
          ++p_;
          ExprPtr e = expr();
          expect_op(")");
          return e;
        }
        if (t.text == "{") {
          Pos pos = next().pos;
          auto items = arguments("}");
          return detail::make(Expr{Expr::Kind::List, pos, "", std::move(items), {}, {}, {}});
        }
        break;
      default:
        break;
    }
    fail("expected an expression");
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
};

inline Script parse_script(std::string_view text) { return Parser(tokenize(text)).parse_script(); }

}  // namespace locus::script
