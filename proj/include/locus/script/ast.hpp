#pragma once

// Syntax tree of the script language, with a canonical printer. Printing a
// parsed script and parsing the result again yields an equal tree.

#include <memory>
#include <string>
#include <vector>

namespace locus::script {

struct Pos {
  int line = 1;
  int col = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Number,     // text: decimal digits
    Name,       // text: identifier
    Shorthand,  // text: quoted contents; rows: parsed polynomials
    List,       // args: items
    Binary,     // text: operator; args: lhs, rhs
    Unary,      // text: "-"; args: operand
    Call,       // text: function name; args
    Index,      // args: target, index
    RingLit,    // text: "QQ" or "ZZ/p"; vars; order (may be empty)
    For,        // text: loop variable; args: from, to, body
  };

  Kind kind;
  Pos pos;
  std::string text;
  std::vector<ExprPtr> args;
  std::vector<std::vector<ExprPtr>> rows;
  std::vector<std::string> vars;
  std::string order;
};

struct Statement {
  enum class Kind { Expr, Assign, Use };

  Kind kind = Kind::Expr;
  Pos pos;
  std::string name;      // Assign target
  bool ring_keyword = false;  // written as `ring NAME = ...`
  ExprPtr expr;
  bool suppressed = false;  // ended by ';'
};

struct Script {
  std::vector<Statement> statements;
};

bool equal(const Expr& a, const Expr& b);
bool equal(const Statement& a, const Statement& b);
bool equal(const Script& a, const Script& b);

std::string to_source(const Expr& e);
std::string to_source(const Statement& s);
std::string to_source(const Script& s);

// Implementation ------------------------------------------------------------

inline bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.vars != b.vars || a.order != b.order) return false;
  if (a.kind == Expr::Kind::Shorthand) return true;  // rows are derived from text
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

inline bool equal(const Statement& a, const Statement& b) {
  if (a.kind != b.kind || a.name != b.name || a.suppressed != b.suppressed) return false;
  return equal(*a.expr, *b.expr);
}

inline bool equal(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    if (!equal(a.statements[i], b.statements[i])) return false;
  }
  return true;
}

namespace detail {

inline bool needs_parens(const Expr& e) {
  return e.kind == Expr::Kind::Binary || e.kind == Expr::Kind::Unary || e.kind == Expr::Kind::For;
}

inline std::string operand(const Expr& e) {
  std::string s = to_source(e);
  return needs_parens(e) ? "(" + s + ")" : s;
}

inline std::string join(const std::vector<ExprPtr>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_source(*items[i]);
  }
  return out;
}

}  // namespace detail

inline std::string to_source(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
    case K::Name:
      return e.text;
    case K::Shorthand:
      return "\"" + e.text + "\"";
    case K::List:
      return "{" + detail::join(e.args) + "}";
    case K::Binary:
      return detail::operand(*e.args[0]) + " " + e.text + " " + detail::operand(*e.args[1]);
    case K::Unary:
      return "-" + detail::operand(*e.args[0]);
    case K::Call:
      return e.text + "(" + detail::join(e.args) + ")";
    case K::Index:
      return detail::operand(*e.args[0]) + "#" + detail::operand(*e.args[1]);
    case K::RingLit: {
      std::string out = e.text + "[";
      for (std::size_t i = 0; i < e.vars.size(); ++i) {
        if (i > 0) out += ", ";
        out += e.vars[i];
      }
      out += "]";
      if (!e.order.empty()) out += " " + e.order;
      return out;
    }
    case K::For:
      return "for " + e.text + " from " + detail::operand(*e.args[0]) + " to " +
             detail::operand(*e.args[1]) + " list " + detail::operand(*e.args[2]);
  }
  return "";
}

inline std::string to_source(const Statement& s) {
  std::string out;
  switch (s.kind) {
    case Statement::Kind::Expr:
      out = to_source(*s.expr);
      break;
    case Statement::Kind::Assign:
      out = (s.ring_keyword ? "ring " : "") + s.name + " = " + to_source(*s.expr);
      break;
    case Statement::Kind::Use:
      out = "use " + to_source(*s.expr);
      break;
  }
  return s.suppressed ? out + ";" : out;
}

inline std::string to_source(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += to_source(st) + "\n";
  return out;
}

}  // namespace locus::script
