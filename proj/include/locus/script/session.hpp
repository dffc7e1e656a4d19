#pragma once

// Evaluation of scripts. A Session owns the symbol table, the current ring
// and the cache of localizations; it executes one statement at a time and
// returns a Record describing the result.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "locus/locus.hpp"
#include "locus/script/ast.hpp"
#include "locus/script/parser.hpp"

namespace locus::script {

class EvalError : public std::runtime_error {
 public:
  EvalError(Pos pos, const std::string& msg)
      : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.col) + ": " + msg),
        pos_(pos),
        message_(msg) {}
  Pos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Pos pos_;
  std::string message_;
};

struct Options {
  std::optional<std::uint32_t> prime;  // replaces p in every ZZ/p literal
  MonomialOrder order = MonomialOrder::GRevLex;
  std::size_t cap = kDefaultLengthCap;
};

/// What one statement produced. `result` is the rendered value.
struct Record {
  int line = 0;
  std::string op;
  std::vector<std::string> inputs;
  std::string result;
  std::string type;
  std::string name;  // assignment target, if any
  bool suppressed = false;
  std::optional<std::vector<std::size_t>> ranks;
  std::optional<std::vector<std::string>> values;  // integers, as decimal text
};

template <class Ring>
struct RingRef {
  std::shared_ptr<const Ring> ring;
};

template <class Ring>
struct Elem {
  std::shared_ptr<const Ring> ring;
  typename Ring::element_type value;
};

template <class F>
struct Value;

template <class F>
struct ListVal {
  std::shared_ptr<const std::vector<Value<F>>> items;
};

template <class F>
struct Value {
  using B = PolyRing<F>;
  using L = LocalRing<F>;
  std::variant<mpz_class, bool, RingRef<B>, RingRef<L>, Elem<B>, Elem<L>, Ideal<B>, Ideal<L>,
               Matrix<B>, Matrix<L>, SubquotientModule<B>, SubquotientModule<L>, ChainComplex<B>,
               ChainComplex<L>, ListVal<F>>
      v;
};

template <class F>
Value<F> make_list(std::vector<Value<F>> items) {
  return Value<F>{ListVal<F>{std::make_shared<const std::vector<Value<F>>>(std::move(items))}};
}

namespace detail {

/// First ring literal's field in an expression ("QQ" or "ZZ/p"), if any.
inline std::optional<std::string> literal_field(const Expr& e) {
  if (e.kind == Expr::Kind::RingLit) return e.text == "QQ" ? "QQ" : "ZZ/p";
  for (const auto& a : e.args) {
    if (auto f = literal_field(*a)) return f;
  }
  return std::nullopt;
}

inline std::pair<std::string, std::vector<ExprPtr>> op_and_inputs(const Statement& s) {
  const Expr& e = *s.expr;
  if (s.kind == Statement::Kind::Use) return {"use", {s.expr}};
  switch (e.kind) {
    case Expr::Kind::Call:
      return {e.text, e.args};
    case Expr::Kind::Binary:
      return {e.text, e.args};
    case Expr::Kind::Unary:
      return {"-", e.args};
    case Expr::Kind::Index:
      return {"#", e.args};
    case Expr::Kind::For:
      return {"for", e.args};
    case Expr::Kind::List:
      return {"list", e.args};
    case Expr::Kind::RingLit:
      return {"ring", {s.expr}};
    case Expr::Kind::Shorthand:
      return {"shorthand", {s.expr}};
    case Expr::Kind::Number:
      return {"number", {s.expr}};
    case Expr::Kind::Name:
      return {"name", {s.expr}};
  }
  return {"", {}};
}

}  // namespace detail

template <class F>
class Session {
 public:
  using B = PolyRing<F>;
  using L = LocalRing<F>;
  using V = Value<F>;

  explicit Session(Options opts = {}) : opts_(opts) {}

  const Options& options() const noexcept { return opts_; }
  bool has_ring() const noexcept { return has_ring_; }

  /// Executes one statement. Throws EvalError on failure; the session is
  /// left as it was before the statement.
  Record execute(const Statement& s) {
    Record rec;
    rec.line = s.pos.line;
    rec.suppressed = s.suppressed;
    auto [op, inputs] = detail::op_and_inputs(s);
    rec.op = op;
    for (const auto& in : inputs) rec.inputs.push_back(to_source(*in));
    pos_ = s.pos;
    try {
      V value = eval(*s.expr);
      switch (s.kind) {
        case Statement::Kind::Use:
          use(value);
          rec.type = "use";
          return rec;
        case Statement::Kind::Assign:
          if (s.ring_keyword && !is_ring(value)) throw std::invalid_argument("expected a ring");
          rec.name = s.name;
          bind(s.name, value);
          break;
        case Statement::Kind::Expr:
          break;
      }
      fill(rec, value);
      return rec;
    } catch (const EvalError&) {
      throw;
    } catch (const SyntaxError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError(pos_, ex.what());
    }
  }

  std::string render(const V& v) const {
    return std::visit([this](const auto& x) { return render_alt(x); }, v.v);
  }

  std::optional<V> lookup(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end()) return std::nullopt;
    return it->second;
  }

 private:
  // ---------------------------------------------------------------- records

  void fill(Record& rec, const V& value) const {
    rec.result = render(value);
    rec.type = type_name(value);
    if (auto* c = std::get_if<ChainComplex<B>>(&value.v)) rec.ranks = c->ranks();
    if (auto* c = std::get_if<ChainComplex<L>>(&value.v)) rec.ranks = c->ranks();
    if (auto* n = std::get_if<mpz_class>(&value.v)) rec.values = std::vector<std::string>{n->get_str()};
    if (auto* l = std::get_if<ListVal<F>>(&value.v)) {
      std::vector<std::string> ints;
      for (const auto& item : *l->items) {
        auto* n = std::get_if<mpz_class>(&item.v);
        if (!n) return;
        ints.push_back(n->get_str());
      }
      rec.values = std::move(ints);
    }
  }

  static std::string type_name(const V& v) {
    static const char* names[] = {"integer",       "boolean",      "ring",          "local ring",
                                  "polynomial",    "local element", "ideal",        "local ideal",
                                  "matrix",        "local matrix", "module",        "local module",
                                  "chain complex", "local chain complex", "list"};
    return names[v.v.index()];
  }

  // -------------------------------------------------------------- rendering

  std::string render_alt(const mpz_class& n) const { return n.get_str(); }
  std::string render_alt(bool b) const { return b ? "true" : "false"; }
  std::string render_alt(const RingRef<B>& r) const { return describe(*r.ring); }
  std::string render_alt(const RingRef<L>& r) const {
    return "localRing(" + ring_name(r.ring->base_ptr().get()) + ", " +
           Ideal<B>(r.ring->base_ptr(), r.ring->prime()).to_string() + ")";
  }
  template <class Ring>
  std::string render_alt(const Elem<Ring>& e) const {
    return e.ring->to_string(e.value);
  }
  template <class Ring>
  std::string render_alt(const Ideal<Ring>& I) const {
    return I.to_string();
  }
  template <class Ring>
  std::string render_alt(const Matrix<Ring>& m) const {
    return m.to_string();
  }
  template <class Ring>
  std::string render_alt(const SubquotientModule<Ring>& M) const {
    return M.to_string(ring_name(M.ring_ptr().get()));
  }
  template <class Ring>
  std::string render_alt(const ChainComplex<Ring>& c) const {
    return c.to_string();
  }
  std::string render_alt(const ListVal<F>& l) const {
    std::string out = "{";
    for (std::size_t i = 0; i < l.items->size(); ++i) {
      if (i > 0) out += ", ";
      out += render((*l.items)[i]);
    }
    return out + "}";
  }

  static std::string describe(const B& R) {
    std::string out = R.field().name() + "[";
    for (std::size_t i = 0; i < R.nvars(); ++i) {
      if (i > 0) out += ", ";
      out += R.variables()[i];
    }
    out += "]";
    if (R.order() != MonomialOrder::GRevLex) out += " " + to_string(R.order());
    return out;
  }

  std::string ring_name(const void* ring) const {
    auto it = ring_names_.find(ring);
    if (it != ring_names_.end()) return it->second;
    for (const auto& [key, RP] : local_cache_) {
      if (RP.get() == ring) return "localRing(" + ring_name(&RP->base()) + ")";
    }
    return "R";
  }

  // -------------------------------------------------------------- bindings

  static bool is_ring(const V& v) {
    return std::holds_alternative<RingRef<B>>(v.v) || std::holds_alternative<RingRef<L>>(v.v);
  }

  void bind(const std::string& name, const V& value) {
    env_[name] = value;
    const void* ring = nullptr;
    if (auto* r = std::get_if<RingRef<B>>(&value.v)) ring = r->ring.get();
    if (auto* r = std::get_if<RingRef<L>>(&value.v)) ring = r->ring.get();
    if (ring && !ring_names_.count(ring)) ring_names_[ring] = name;
  }

  void use(const V& v) {
    if (auto* r = std::get_if<RingRef<B>>(&v.v)) {
      current_ = *r;
    } else if (auto* r = std::get_if<RingRef<L>>(&v.v)) {
      current_ = *r;
    } else {
      throw std::invalid_argument("use expects a ring, got " + type_name(v));
    }
  }

  // ------------------------------------------------------------- evaluation

  V eval(const Expr& e) {
    Pos saved = pos_;
    pos_ = e.pos;
    V out = eval_inner(e);
    pos_ = saved;
    return out;
  }

  V eval_inner(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Number:
        return V{mpz_class(e.text, 10)};
      case K::Name:
        return resolve(e.text, in_shorthand_);
      case K::Shorthand:
        return eval_shorthand(e);
      case K::List: {
        std::vector<V> items;
        for (const auto& a : e.args) items.push_back(eval(*a));
        return make_list(std::move(items));
      }
      case K::Unary:
        return negate(eval(*e.args[0]));
      case K::Binary:
        return binary(e.text, eval(*e.args[0]), eval(*e.args[1]));
      case K::Call: {
        std::vector<V> args;
        for (const auto& a : e.args) args.push_back(eval(*a));
        pos_ = e.pos;
        return call(e.text, args);
      }
      case K::Index:
        return index(eval(*e.args[0]), eval(*e.args[1]));
      case K::RingLit:
        return ring_literal(e);
      case K::For:
        return for_loop(e);
    }
    throw std::logic_error("unknown expression");
  }

  V resolve(const std::string& name, bool ring_only) {
    if (!ring_only) {
      auto it = env_.find(name);
      if (it != env_.end()) return it->second;
    }
    if (auto* r = std::get_if<RingRef<B>>(&current_)) {
      if (auto i = r->ring->index_of(name)) return V{Elem<B>{r->ring, r->ring->variable(*i)}};
    } else if (auto* r = std::get_if<RingRef<L>>(&current_)) {
      const auto& R = r->ring->base();
      if (auto i = R.index_of(name)) return V{Elem<L>{r->ring, r->ring->promote(R.variable(*i))}};
    }
    if (ring_only) throw std::invalid_argument("unknown variable '" + name + "'");
    throw std::invalid_argument("unbound name '" + name + "'");
  }

  V eval_shorthand(const Expr& e) {
    if (std::holds_alternative<std::monostate>(current_)) {
      throw std::invalid_argument("no ring in use for \"" + e.text + "\"");
    }
    in_shorthand_ = true;
    struct Reset {
      bool& flag;
      ~Reset() { flag = false; }
    } reset{in_shorthand_};
    std::vector<V> rows;
    for (const auto& row : e.rows) {
      std::vector<V> items;
      for (const auto& x : row) items.push_back(coerce_current(eval(*x)));
      rows.push_back(make_list(std::move(items)));
    }
    if (rows.size() == 1) return rows[0];
    return make_list(std::move(rows));
  }

  /// Integers become constants of the current ring.
  V coerce_current(V v) {
    auto* n = std::get_if<mpz_class>(&v.v);
    if (!n) return v;
    if (auto* r = std::get_if<RingRef<B>>(&current_)) return V{Elem<B>{r->ring, int_to(*r->ring, *n)}};
    if (auto* r = std::get_if<RingRef<L>>(&current_)) return V{Elem<L>{r->ring, int_to(*r->ring, *n)}};
    return v;
  }

  V ring_literal(const Expr& e) {
    F field = make_field(e.text);
    MonomialOrder order = e.order.empty() ? opts_.order : parse_order(e.order);
    auto R = make_poly_ring(std::move(field), e.vars, order);
    has_ring_ = true;
    current_ = RingRef<B>{R};
    return V{RingRef<B>{R}};
  }

  F make_field(const std::string& text) const {
    if constexpr (std::is_same_v<F, RationalField>) {
      if (text != "QQ") throw std::invalid_argument("this session works over QQ; cannot mix in " + text);
      return RationalField();
    } else {
      if (text == "QQ") throw std::invalid_argument("this session works over ZZ/p; cannot mix in QQ");
      unsigned long p = std::stoul(text.substr(3));
      return PrimeField(opts_.prime.value_or(static_cast<std::uint32_t>(p)));
    }
  }

  V for_loop(const Expr& e) {
    long lo = to_long(eval(*e.args[0]), "for bound");
    long hi = to_long(eval(*e.args[1]), "for bound");
    auto saved = lookup(e.text);
    std::vector<V> out;
    try {
      for (long i = lo; i <= hi; ++i) {
        env_[e.text] = V{mpz_class(i)};
        out.push_back(eval(*e.args[2]));
      }
    } catch (...) {
      restore(e.text, saved);
      throw;
    }
    restore(e.text, saved);
    return make_list(std::move(out));
  }

  void restore(const std::string& name, const std::optional<V>& saved) {
    if (saved) {
      env_[name] = *saved;
    } else {
      env_.erase(name);
    }
  }

  // --------------------------------------------------------------- coercion

  static typename B::element_type int_to(const B& R, const mpz_class& n) {
    return R.constant(R.field().from_mpz(n));
  }
  static typename L::element_type int_to(const L& RP, const mpz_class& n) {
    return RP.promote(int_to(RP.base(), n));
  }

  static long to_long(const V& v, const char* what) {
    auto* n = std::get_if<mpz_class>(&v.v);
    if (!n || !n->fits_slong_p()) throw std::invalid_argument(std::string(what) + " must be an integer");
    return n->get_si();
  }

  /// The local ring an operand lives over, if any.
  static std::shared_ptr<const L> local_ring_of(const V& v) {
    return std::visit(
        [](const auto& x) -> std::shared_ptr<const L> {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, RingRef<L>> || std::is_same_v<T, Elem<L>>) {
            return x.ring;
          } else if constexpr (std::is_same_v<T, Ideal<L>> || std::is_same_v<T, Matrix<L>> ||
                               std::is_same_v<T, SubquotientModule<L>> ||
                               std::is_same_v<T, ChainComplex<L>>) {
            return x.ring_ptr();
          } else {
            return nullptr;
          }
        },
        v.v);
  }

  static std::shared_ptr<const B> base_ring_of(const V& v) {
    return std::visit(
        [](const auto& x) -> std::shared_ptr<const B> {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, RingRef<B>> || std::is_same_v<T, Elem<B>>) {
            return x.ring;
          } else if constexpr (std::is_same_v<T, Ideal<B>> || std::is_same_v<T, Matrix<B>> ||
                               std::is_same_v<T, SubquotientModule<B>> ||
                               std::is_same_v<T, ChainComplex<B>>) {
            return x.ring_ptr();
          } else {
            return nullptr;
          }
        },
        v.v);
  }

  /// Promotes a base-ring value (or an integer) to RP; local values must
  /// already live over RP.
  static V to_local(const V& v, const std::shared_ptr<const L>& RP) {
    if (auto r = local_ring_of(v)) {
      if (r.get() != RP.get()) throw RingMismatch();
      return v;
    }
    if (auto* n = std::get_if<mpz_class>(&v.v)) return V{Elem<L>{RP, int_to(*RP, *n)}};
    if (auto* l = std::get_if<ListVal<F>>(&v.v)) {
      std::vector<V> items;
      for (const auto& x : *l->items) items.push_back(to_local(x, RP));
      return make_list(std::move(items));
    }
    auto base = base_ring_of(v);
    if (!base || base.get() != &RP->base()) throw RingMismatch();
    if (auto* e = std::get_if<Elem<B>>(&v.v)) return V{Elem<L>{RP, RP->promote(e->value)}};
    if (auto* I = std::get_if<Ideal<B>>(&v.v)) return V{promote(*I, RP)};
    if (auto* m = std::get_if<Matrix<B>>(&v.v)) return V{promote(*m, RP)};
    if (auto* M = std::get_if<SubquotientModule<B>>(&v.v)) return V{promote(*M, RP)};
    if (auto* c = std::get_if<ChainComplex<B>>(&v.v)) return V{tensor_to_local(*c, RP)};
    throw std::invalid_argument("cannot promote a ring");
  }

  template <class Ring>
  static typename Ring::element_type scalar(const V& v, const std::shared_ptr<const Ring>& ring) {
    if (auto* n = std::get_if<mpz_class>(&v.v)) return int_to(*ring, *n);
    if (auto* e = std::get_if<Elem<Ring>>(&v.v)) {
      if (e->ring.get() != ring.get()) throw RingMismatch();
      return e->value;
    }
    throw std::invalid_argument("expected a ring element, got " + type_name(v));
  }

  /// Ring of a list of scalar-like values: local if any is local, base if
  /// any is base, otherwise the current ring.
  std::variant<std::monostate, RingRef<B>, RingRef<L>> common_ring(const std::vector<V>& vs) const {
    for (const auto& v : vs) {
      if (auto r = local_ring_of(v)) return RingRef<L>{r};
    }
    for (const auto& v : vs) {
      if (auto r = base_ring_of(v)) return RingRef<B>{r};
    }
    return current_;
  }

  // -------------------------------------------------------------- operators

  V negate(const V& v) {
    if (auto* n = std::get_if<mpz_class>(&v.v)) return V{mpz_class(-*n)};
    if (auto* e = std::get_if<Elem<B>>(&v.v)) return V{Elem<B>{e->ring, e->ring->neg(e->value)}};
    if (auto* e = std::get_if<Elem<L>>(&v.v)) return V{Elem<L>{e->ring, e->ring->neg(e->value)}};
    if (auto* m = std::get_if<Matrix<B>>(&v.v)) return V{m->scaled(m->ring().from_int(-1))};
    if (auto* m = std::get_if<Matrix<L>>(&v.v)) return V{m->scaled(m->ring().from_int(-1))};
    throw std::invalid_argument("cannot negate " + type_name(v));
  }

  V binary(const std::string& op, V a, V b) {
    if (op == "==") return V{equal_values(a, b)};
    if (op == "..") {
      long lo = to_long(a, "range bound"), hi = to_long(b, "range bound");
      std::vector<V> items;
      for (long i = lo; i <= hi; ++i) items.push_back(V{mpz_class(i)});
      return make_list(std::move(items));
    }
    if (op == "**") return tensor(a, b);
    auto* x = std::get_if<mpz_class>(&a.v);
    auto* y = std::get_if<mpz_class>(&b.v);
    if (x && y) return int_arith(op, *x, *y);
    if (op == "^") {
      if (auto* r = std::get_if<RingRef<B>>(&a.v)) {
        return V{SubquotientModule<B>::free(r->ring, to_rank(b))};
      }
      if (auto* r = std::get_if<RingRef<L>>(&a.v)) {
        return V{SubquotientModule<L>::free(r->ring, to_rank(b))};
      }
    }
    if (auto RP = local_ring_of(a) ? local_ring_of(a) : local_ring_of(b)) {
      if (!y || op != "^") b = to_local(b, RP);
      a = to_local(a, RP);
      return arith<L>(op, a, b, RP);
    }
    auto R = base_ring_of(a) ? base_ring_of(a) : base_ring_of(b);
    if (!R) throw std::invalid_argument("operator " + op + " is not defined for " + type_name(a) + " and " + type_name(b));
    return arith<B>(op, a, b, R);
  }

  static std::size_t to_rank(const V& v) {
    long n = to_long(v, "rank");
    if (n < 0) throw std::invalid_argument("rank must be non-negative");
    return static_cast<std::size_t>(n);
  }

  static V int_arith(const std::string& op, const mpz_class& x, const mpz_class& y) {
    if (op == "+") return V{mpz_class(x + y)};
    if (op == "-") return V{mpz_class(x - y)};
    if (op == "*") return V{mpz_class(x * y)};
    if (op == "/") {
      if (y == 0) throw DivisionByZero();
      if (x % y != 0) throw std::invalid_argument("integer division is not exact");
      return V{mpz_class(x / y)};
    }
    if (op == "^") {
      if (y < 0 || !y.fits_ulong_p()) throw std::invalid_argument("exponent out of range");
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), y.get_ui());
      return V{r};
    }
    throw std::invalid_argument("operator " + op + " is not defined for integers");
  }

  template <class Ring>
  static bool is_scalar_value(const V& v) {
    return std::holds_alternative<mpz_class>(v.v) || std::holds_alternative<Elem<Ring>>(v.v);
  }

  template <class Ring>
  V arith(const std::string& op, const V& a, const V& b, const std::shared_ptr<const Ring>& ring) {
    const Ring& R = *ring;
    using E = typename Ring::element_type;
    if (is_scalar_value<Ring>(a) && is_scalar_value<Ring>(b)) {
      if (op == "^") return V{Elem<Ring>{ring, power(R, scalar(a, ring), to_long(b, "exponent"))}};
      E x = scalar(a, ring), y = scalar(b, ring);
      if (op == "+") return V{Elem<Ring>{ring, R.add(x, y)}};
      if (op == "-") return V{Elem<Ring>{ring, R.sub(x, y)}};
      if (op == "*") return V{Elem<Ring>{ring, R.mul(x, y)}};
      if (op == "/") {
        if (R.is_zero(y)) throw DivisionByZero();
        if (!R.is_unit(y)) {
          if constexpr (std::is_same_v<Ring, B>) {
            throw std::invalid_argument("cannot divide by " + R.to_string(y) +
                                        " in a polynomial ring; use a local ring");
          }
        }
        return V{Elem<Ring>{ring, R.mul(x, R.unit_inverse(y))}};
      }
    }
    auto* ma = std::get_if<Matrix<Ring>>(&a.v);
    auto* mb = std::get_if<Matrix<Ring>>(&b.v);
    if (ma && mb) {
      if (op == "*") return V{*ma * *mb};
      if (op == "+") return V{*ma + *mb};
      if (op == "-") return V{*ma + mb->scaled(R.from_int(-1))};
    }
    if (op == "*" && mb && is_scalar_value<Ring>(a)) return V{mb->scaled(scalar(a, ring))};
    if (op == "*" && ma && is_scalar_value<Ring>(b)) return V{ma->scaled(scalar(b, ring))};
    auto* Ia = std::get_if<Ideal<Ring>>(&a.v);
    auto* Ib = std::get_if<Ideal<Ring>>(&b.v);
    if (Ia && Ib && op == "+") return V{*Ia + *Ib};
    if (Ia && Ib && op == "*") return V{*Ia * *Ib};
    if (Ia && op == "^") return V{Ia->pow(to_long(b, "exponent"))};
    auto* Ma = std::get_if<SubquotientModule<Ring>>(&a.v);
    auto* Mb = std::get_if<SubquotientModule<Ring>>(&b.v);
    if (Ma && Ib && op == "/") return V{quotient(*Ma, *Ib)};
    if (Ia && Mb && op == "*") return V{product(*Ia, *Mb)};
    throw std::invalid_argument("operator " + op + " is not defined for " + type_name(a) + " and " +
                                type_name(b));
  }

  template <class Ring>
  static typename Ring::element_type power(const Ring& R, typename Ring::element_type x, long n) {
    if (n < 0) {
      x = R.unit_inverse(x);
      n = -n;
    }
    auto result = R.one();
    while (n > 0) {
      if (n & 1) result = R.mul(result, x);
      n >>= 1;
      if (n > 0) x = R.mul(x, x);
    }
    return result;
  }

  bool equal_values(const V& a, const V& b) {
    auto* x = std::get_if<mpz_class>(&a.v);
    auto* y = std::get_if<mpz_class>(&b.v);
    if (x && y) return *x == *y;
    if (auto* p = std::get_if<bool>(&a.v)) {
      if (auto* q = std::get_if<bool>(&b.v)) return *p == *q;
    }
    if (y && *y == 0) {
      if (auto* m = std::get_if<Matrix<B>>(&a.v)) return m->is_zero();
      if (auto* m = std::get_if<Matrix<L>>(&a.v)) return m->is_zero();
    }
    if (auto RP = local_ring_of(a) ? local_ring_of(a) : local_ring_of(b)) {
      return equal_in<L>(to_local(a, RP), to_local(b, RP), RP);
    }
    auto R = base_ring_of(a) ? base_ring_of(a) : base_ring_of(b);
    if (!R) throw std::invalid_argument("cannot compare " + type_name(a) + " and " + type_name(b));
    return equal_in<B>(a, b, R);
  }

  template <class Ring>
  bool equal_in(const V& a, const V& b, const std::shared_ptr<const Ring>& ring) {
    if (is_scalar_value<Ring>(a) && is_scalar_value<Ring>(b)) {
      return ring->equal(scalar(a, ring), scalar(b, ring));
    }
    auto* ma = std::get_if<Matrix<Ring>>(&a.v);
    auto* mb = std::get_if<Matrix<Ring>>(&b.v);
    if (ma && mb) return *ma == *mb;
    if constexpr (std::is_same_v<Ring, B>) {
      auto* Ia = std::get_if<Ideal<B>>(&a.v);
      auto* Ib = std::get_if<Ideal<B>>(&b.v);
      if (Ia && Ib) {
        auto Ga = ideal_gb(ring, Ia->generators());
        auto Gb = ideal_gb(ring, Ib->generators());
        for (const auto& g : Ia->generators()) {
          if (!contains(Gb, g)) return false;
        }
        for (const auto& g : Ib->generators()) {
          if (!contains(Ga, g)) return false;
        }
        return true;
      }
    }
    throw std::invalid_argument("cannot compare " + type_name(a) + " and " + type_name(b));
  }

  V index(const V& target, const V& idx) {
    long i = to_long(idx, "index");
    auto pick = [&](std::size_t n) -> std::size_t {
      long k = i < 0 ? i + static_cast<long>(n) : i;
      if (k < 0 || k >= static_cast<long>(n)) throw IndexOutOfRange("index " + std::to_string(i) + " out of range");
      return static_cast<std::size_t>(k);
    };
    if (auto* l = std::get_if<ListVal<F>>(&target.v)) return (*l->items)[pick(l->items->size())];
    if (auto* I = std::get_if<Ideal<B>>(&target.v)) {
      return V{Elem<B>{I->ring_ptr(), I->generators()[pick(I->size())]}};
    }
    if (auto* I = std::get_if<Ideal<L>>(&target.v)) {
      return V{Elem<L>{I->ring_ptr(), I->generators()[pick(I->size())]}};
    }
    if (auto* c = std::get_if<ChainComplex<B>>(&target.v)) return V{c->differential(static_cast<std::size_t>(i))};
    if (auto* c = std::get_if<ChainComplex<L>>(&target.v)) return V{c->differential(static_cast<std::size_t>(i))};
    throw std::invalid_argument("cannot index " + type_name(target));
  }

  V tensor(const V& a, const V& b) {
    auto* r = std::get_if<RingRef<L>>(&b.v);
    if (!r) throw std::invalid_argument("** expects a local ring on the right, got " + type_name(b));
    return to_local(a, r->ring);
  }

  // -------------------------------------------------------------- builtins

  static void arity(const std::string& name, const std::vector<V>& args, std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      throw std::invalid_argument(name + " expects " + want + " argument(s), got " +
                                  std::to_string(args.size()));
    }
  }

  [[noreturn]] static void bad(const std::string& name, const V& v) {
    throw std::invalid_argument(name + " is not defined for " + type_name(v));
  }

  V call(const std::string& name, const std::vector<V>& args) {
    if (name == "ideal") return make_ideal(args);
    if (name == "matrix" || name == "mutableMatrix") {
      arity(name, args, 1, 1);
      return make_matrix(args[0]);
    }
    if (name == "gens") return gens(args);
    if (name == "localRing" || name == "localize") return local_ring(args);
    if (name == "promote") {
      arity(name, args, 2, 2);
      if (auto* r = std::get_if<RingRef<L>>(&args[1].v)) return to_local(args[0], r->ring);
      if (auto* r = std::get_if<RingRef<B>>(&args[1].v)) {
        if (auto* n = std::get_if<mpz_class>(&args[0].v)) return V{Elem<B>{r->ring, int_to(*r->ring, *n)}};
        if (base_ring_of(args[0]).get() == r->ring.get()) return args[0];
      }
      throw std::invalid_argument("promote expects a value and a local ring over its ring");
    }
    if (name == "liftUp") {
      arity(name, args, 1, 1);
      return lift(args[0]);
    }
    if (name == "res" || name == "resolution") {
      arity(name, args, 1, 1);
      return resolve(args[0]);
    }
    if (name == "tensor") {
      arity(name, args, 2, 2);
      return tensor(args[0], args[1]);
    }
    if (name == "prune" || name == "pruneComplex") {
      arity(name, args, 1, 1);
      return prune(name, args[0]);
    }
    if (name == "pruneDiff" || name == "pruneUnit") {
      arity(name, args, 2, 2);
      return prune_indexed(name, args[0], to_long(args[1], "index"));
    }
    if (name == "syz") {
      arity(name, args, 1, 1);
      return syz(args[0]);
    }
    if (name == "mingens") {
      arity(name, args, 1, 1);
      return min_gens(args[0]);
    }
    if (name == "minpres" || name == "minimalPresentation") {
      arity(name, args, 1, 1);
      return V{minimal_presentation(local_module(name, args[0])).module};
    }
    if (name == "length") {
      arity(name, args, 1, 1);
      if (auto* l = std::get_if<ListVal<F>>(&args[0].v)) return V{mpz_class(static_cast<unsigned long>(l->items->size()))};
      return V{mpz_class(static_cast<unsigned long>(length_of(local_module(name, args[0]), opts_.cap)))};
    }
    if (name == "hsf" || name == "hilbertSamuelFunction") return hsf(name, args);
    if (name == "betti" || name == "ranks") {
      arity(name, args, 1, 1);
      std::vector<std::size_t> r;
      if (auto* c = std::get_if<ChainComplex<B>>(&args[0].v)) {
        r = name == "betti" ? betti_ranks(*c) : c->ranks();
      } else if (auto* c = std::get_if<ChainComplex<L>>(&args[0].v)) {
        r = name == "betti" ? betti_ranks(*c) : c->ranks();
      } else {
        bad(name, args[0]);
      }
      std::vector<V> items;
      for (auto k : r) items.push_back(V{mpz_class(static_cast<unsigned long>(k))});
      return make_list(std::move(items));
    }
    if (name == "isMinimal") {
      arity(name, args, 1, 1);
      if (auto* c = std::get_if<ChainComplex<B>>(&args[0].v)) return V{is_unit_free(*c)};
      if (auto* c = std::get_if<ChainComplex<L>>(&args[0].v)) return V{is_unit_free(*c)};
      bad(name, args[0]);
    }
    if (name == "coker" || name == "cokernel" || name == "image") {
      arity(name, args, 1, 1);
      bool image = name == "image";
      if (auto* m = std::get_if<Matrix<B>>(&args[0].v)) {
        return V{image ? SubquotientModule<B>::image(*m) : SubquotientModule<B>::cokernel(*m)};
      }
      if (auto* m = std::get_if<Matrix<L>>(&args[0].v)) {
        return V{image ? SubquotientModule<L>::image(*m) : SubquotientModule<L>::cokernel(*m)};
      }
      bad(name, args[0]);
    }
    if (name == "subquotient") {
      arity(name, args, 2, 2);
      if (auto RP = local_ring_of(args[0]) ? local_ring_of(args[0]) : local_ring_of(args[1])) {
        return V{SubquotientModule<L>::subquotient(std::get<Matrix<L>>(to_local(args[0], RP).v),
                                                   std::get<Matrix<L>>(to_local(args[1], RP).v))};
      }
      auto* g = std::get_if<Matrix<B>>(&args[0].v);
      auto* h = std::get_if<Matrix<B>>(&args[1].v);
      if (!g || !h) throw std::invalid_argument("subquotient expects two matrices");
      return V{SubquotientModule<B>::subquotient(*g, *h)};
    }
    if (name == "presentation") {
      arity(name, args, 1, 1);
      if (auto* M = std::get_if<SubquotientModule<B>>(&args[0].v)) return V{presentation(*M)};
      if (auto* M = std::get_if<SubquotientModule<L>>(&args[0].v)) return V{presentation(*M)};
      bad(name, args[0]);
    }
    if (name == "relations") {
      arity(name, args, 1, 1);
      if (auto* M = std::get_if<SubquotientModule<B>>(&args[0].v)) return V{M->relations()};
      if (auto* M = std::get_if<SubquotientModule<L>>(&args[0].v)) return V{M->relations()};
      bad(name, args[0]);
    }
    if (name == "gb") {
      arity(name, args, 1, 1);
      if (auto* I = std::get_if<Ideal<B>>(&args[0].v)) {
        return V{Ideal<B>(I->ring_ptr(), ideal_gb(I->ring_ptr(), I->generators()).polynomials())};
      }
      if (auto* m = std::get_if<Matrix<B>>(&args[0].v)) {
        auto G = column_gb(*m);
        std::vector<std::vector<Polynomial<F>>> cols;
        for (std::size_t i = 0; i < G.size(); ++i) cols.push_back(G.generator(i));
        return V{Matrix<B>::from_columns(m->ring_ptr(), m->rows(), cols)};
      }
      bad(name, args[0]);
    }
    if (name == "transpose") {
      arity(name, args, 1, 1);
      if (auto* m = std::get_if<Matrix<B>>(&args[0].v)) return V{m->transpose()};
      if (auto* m = std::get_if<Matrix<L>>(&args[0].v)) return V{m->transpose()};
      bad(name, args[0]);
    }
    if (name == "multiplicity") {
      arity(name, args, 2, 2);
      auto* I = std::get_if<Ideal<B>>(&args[0].v);
      if (!I) bad(name, args[0]);
      auto P = prime_generators(args[1], I->ring_ptr());
      return V{mpz_class(static_cast<unsigned long>(multiplicity_at(*I, P, opts_.cap)))};
    }
    if (name == "modulo") {
      arity(name, args, 2, 2);
      return modulo(args[0], args[1]);
    }
    if (name == "isUnit") {
      arity(name, args, 1, 1);
      if (auto* n = std::get_if<mpz_class>(&args[0].v)) return V{*n != 0};
      if (auto* e = std::get_if<Elem<B>>(&args[0].v)) return V{e->ring->is_unit(e->value)};
      if (auto* e = std::get_if<Elem<L>>(&args[0].v)) return V{e->ring->is_unit(e->value)};
      bad(name, args[0]);
    }
    if (name == "monomialCurveIdeal") {
      arity(name, args, 2, 2);
      return monomial_curve(args[0], args[1]);
    }
    if (name == "numgens") {
      arity(name, args, 1, 1);
      std::size_t n = 0;
      if (auto* I = std::get_if<Ideal<B>>(&args[0].v)) n = I->size();
      else if (auto* I = std::get_if<Ideal<L>>(&args[0].v)) n = I->size();
      else if (auto* M = std::get_if<SubquotientModule<B>>(&args[0].v)) n = M->generators().cols();
      else if (auto* M = std::get_if<SubquotientModule<L>>(&args[0].v)) n = M->generators().cols();
      else if (auto* r = std::get_if<RingRef<B>>(&args[0].v)) n = r->ring->nvars();
      else if (auto* r = std::get_if<RingRef<L>>(&args[0].v)) n = r->ring->nvars();
      else bad(name, args[0]);
      return V{mpz_class(static_cast<unsigned long>(n))};
    }
    if (name == "ring") {
      arity(name, args, 1, 1);
      if (auto r = local_ring_of(args[0])) return V{RingRef<L>{r}};
      if (auto r = base_ring_of(args[0])) return V{RingRef<B>{r}};
      bad(name, args[0]);
    }
    if (name == "numrows" || name == "numcols" || name == "entries") {
      arity(name, args, 1, 1);
      if (auto* m = std::get_if<Matrix<B>>(&args[0].v)) return shape_query(name, *m);
      if (auto* m = std::get_if<Matrix<L>>(&args[0].v)) return shape_query(name, *m);
      bad(name, args[0]);
    }
    throw std::invalid_argument("unknown function '" + name + "'");
  }

  template <class Ring>
  V shape_query(const std::string& name, const Matrix<Ring>& m) {
    if (name == "numrows") return V{mpz_class(static_cast<unsigned long>(m.rows()))};
    if (name == "numcols") return V{mpz_class(static_cast<unsigned long>(m.cols()))};
    std::vector<V> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::vector<V> row;
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(V{Elem<Ring>{m.ring_ptr(), m(r, c)}});
      rows.push_back(make_list(std::move(row)));
    }
    return make_list(std::move(rows));
  }

  /// Scalars of a nested argument list, in order.
  void flatten(const V& v, std::vector<V>& out) const {
    if (auto* l = std::get_if<ListVal<F>>(&v.v)) {
      for (const auto& x : *l->items) flatten(x, out);
    } else if (auto* m = std::get_if<Matrix<B>>(&v.v)) {
      for (std::size_t r = 0; r < m->rows(); ++r) {
        for (std::size_t c = 0; c < m->cols(); ++c) out.push_back(V{Elem<B>{m->ring_ptr(), (*m)(r, c)}});
      }
    } else if (auto* m = std::get_if<Matrix<L>>(&v.v)) {
      for (std::size_t r = 0; r < m->rows(); ++r) {
        for (std::size_t c = 0; c < m->cols(); ++c) out.push_back(V{Elem<L>{m->ring_ptr(), (*m)(r, c)}});
      }
    } else {
      out.push_back(v);
    }
  }

  V make_ideal(const std::vector<V>& args) {
    if (args.size() == 1 && (std::holds_alternative<Ideal<B>>(args[0].v) ||
                             std::holds_alternative<Ideal<L>>(args[0].v))) {
      return args[0];
    }
    std::vector<V> items;
    for (const auto& a : args) flatten(a, items);
    auto ring = common_ring(items);
    if (auto* r = std::get_if<RingRef<L>>(&ring)) {
      std::vector<typename L::element_type> gens;
      for (const auto& x : items) gens.push_back(scalar(to_local(x, r->ring), r->ring));
      return V{Ideal<L>(r->ring, std::move(gens))};
    }
    if (auto* r = std::get_if<RingRef<B>>(&ring)) {
      std::vector<typename B::element_type> gens;
      for (const auto& x : items) gens.push_back(scalar(x, r->ring));
      return V{Ideal<B>(r->ring, std::move(gens))};
    }
    throw std::invalid_argument("ideal needs a ring; declare one first");
  }

  V make_matrix(const V& arg) {
    if (auto* I = std::get_if<Ideal<B>>(&arg.v)) return V{I->matrix()};
    if (auto* I = std::get_if<Ideal<L>>(&arg.v)) return V{I->matrix()};
    if (std::holds_alternative<Matrix<B>>(arg.v) || std::holds_alternative<Matrix<L>>(arg.v)) return arg;
    auto* l = std::get_if<ListVal<F>>(&arg.v);
    if (!l) bad("matrix", arg);
    std::vector<std::vector<V>> rows;
    bool nested = !l->items->empty() && std::holds_alternative<ListVal<F>>((*l->items)[0].v);
    if (nested) {
      for (const auto& r : *l->items) {
        auto* row = std::get_if<ListVal<F>>(&r.v);
        if (!row) throw ShapeMismatch("matrix rows must all be lists");
        rows.push_back(*row->items);
      }
    } else {
      rows.push_back(*l->items);
    }
    std::vector<V> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    auto ring = common_ring(all);
    if (auto* r = std::get_if<RingRef<L>>(&ring)) return V{build_matrix<L>(rows, r->ring)};
    if (auto* r = std::get_if<RingRef<B>>(&ring)) return V{build_matrix<B>(rows, r->ring)};
    throw std::invalid_argument("matrix needs a ring; declare one first");
  }

  template <class Ring>
  Matrix<Ring> build_matrix(const std::vector<std::vector<V>>& rows, const std::shared_ptr<const Ring>& ring) {
    std::vector<std::vector<typename Ring::element_type>> entries;
    for (const auto& row : rows) {
      std::vector<typename Ring::element_type> out;
      for (const auto& x : row) {
        if constexpr (std::is_same_v<Ring, L>) {
          out.push_back(scalar(to_local(x, ring), ring));
        } else {
          out.push_back(scalar(x, ring));
        }
      }
      entries.push_back(std::move(out));
    }
    return Matrix<Ring>::from_rows(ring, entries);
  }

  V gens(const std::vector<V>& args) {
    arity("gens", args, 1, 1);
    const V& a = args[0];
    if (auto* r = std::get_if<RingRef<B>>(&a.v)) {
      std::vector<V> out;
      for (auto& p : r->ring->variables_as_polys()) out.push_back(V{Elem<B>{r->ring, p}});
      return make_list(std::move(out));
    }
    if (auto* r = std::get_if<RingRef<L>>(&a.v)) {
      std::vector<V> out;
      for (auto& p : r->ring->base().variables_as_polys()) out.push_back(V{Elem<L>{r->ring, r->ring->promote(p)}});
      return make_list(std::move(out));
    }
    if (auto* I = std::get_if<Ideal<B>>(&a.v)) return V{I->matrix()};
    if (auto* I = std::get_if<Ideal<L>>(&a.v)) return V{I->matrix()};
    if (auto* M = std::get_if<SubquotientModule<B>>(&a.v)) return V{M->generators()};
    if (auto* M = std::get_if<SubquotientModule<L>>(&a.v)) return V{M->generators()};
    bad("gens", a);
  }

  std::vector<Polynomial<F>> prime_generators(const V& v, const std::shared_ptr<const B>& R) {
    std::vector<V> items;
    if (auto* I = std::get_if<Ideal<B>>(&v.v)) {
      if (I->ring_ptr().get() != R.get()) throw RingMismatch();
      return I->generators();
    }
    flatten(v, items);
    std::vector<Polynomial<F>> out;
    for (const auto& x : items) out.push_back(scalar(x, R));
    return out;
  }

  V local_ring(const std::vector<V>& args) {
    arity("localRing", args, 2, 2);
    auto* r = std::get_if<RingRef<B>>(&args[0].v);
    if (!r) throw std::invalid_argument("localRing expects a polynomial ring first");
    auto P = prime_generators(args[1], r->ring);
    auto gb = ideal_gb(r->ring, P);
    std::string key;
    for (const auto& g : gb.polynomials()) key += g.to_string() + ",";
    auto& slot = local_cache_[{r->ring.get(), key}];
    if (!slot) slot = make_local_ring(r->ring, P);
    return V{RingRef<L>{slot}};
  }

  V lift(const V& v) {
    if (auto* e = std::get_if<Elem<L>>(&v.v)) {
      Matrix<L> m(e->ring, 1, 1);
      m.at(0, 0) = e->value;
      return V{Elem<B>{e->ring->base_ptr(), lift_up(m)(0, 0)}};
    }
    if (auto* I = std::get_if<Ideal<L>>(&v.v)) {
      auto m = lift_up(I->matrix());
      return V{Ideal<B>(I->ring().base_ptr(), m.row(0))};
    }
    if (auto* m = std::get_if<Matrix<L>>(&v.v)) return V{lift_up(*m)};
    if (auto* M = std::get_if<SubquotientModule<L>>(&v.v)) return V{lift_up(*M)};
    bad("liftUp", v);
  }

  template <class Ring>
  static Matrix<Ring> drop_zero_columns(const Matrix<Ring>& m) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.column_is_zero(c)) keep.push_back(c);
    }
    return m.select_columns(keep);
  }

  V resolve(const V& v) {
    if (auto* I = std::get_if<Ideal<B>>(&v.v)) return V{resolve_base(drop_zero_columns(I->matrix()))};
    if (auto* m = std::get_if<Matrix<B>>(&v.v)) return V{resolve_base(drop_zero_columns(*m))};
    if (auto* M = std::get_if<SubquotientModule<B>>(&v.v)) {
      return V{resolve_base(drop_zero_columns(presentation(*M)))};
    }
    if (std::holds_alternative<Ideal<L>>(v.v) || std::holds_alternative<Matrix<L>>(v.v) ||
        std::holds_alternative<SubquotientModule<L>>(v.v)) {
      auto M = local_module("res", v);
      auto h = drop_zero_columns(presentation(M));
      if (h.cols() == 0) return V{ChainComplex<L>(M.ring_ptr(), h.rows())};
      return V{resolution_local(LocalModule<F>::cokernel(h)).complex};
    }
    bad("res", v);
  }

  /// Ideals and matrices stand for the cokernel of their generator matrix.
  LocalModule<F> local_module(const std::string& name, const V& v) {
    if (auto* M = std::get_if<SubquotientModule<L>>(&v.v)) return *M;
    if (auto* I = std::get_if<Ideal<L>>(&v.v)) return LocalModule<F>::cokernel(I->matrix());
    if (auto* m = std::get_if<Matrix<L>>(&v.v)) return LocalModule<F>::cokernel(*m);
    bad(name, v);
  }

  V prune(const std::string& name, const V& v) {
    if (auto* c = std::get_if<ChainComplex<L>>(&v.v)) return V{prune_complex(*c).complex};
    if (auto* c = std::get_if<ChainComplex<B>>(&v.v)) return V{prune_complex(*c).complex};
    if (auto* M = std::get_if<SubquotientModule<L>>(&v.v)) return V{minimal_presentation(*M).module};
    bad(name, v);
  }

  /// For a list of matrices the index is 0-based into the list; for a
  /// complex it names the differential d_i.
  V prune_indexed(const std::string& name, const V& target, long index) {
    bool single = name == "pruneUnit";
    if (auto* c = std::get_if<ChainComplex<L>>(&target.v)) return V{prune_at(*c, index, single)};
    if (auto* c = std::get_if<ChainComplex<B>>(&target.v)) return V{prune_at(*c, index, single)};
    auto* l = std::get_if<ListVal<F>>(&target.v);
    if (!l || l->items->empty()) bad(name, target);
    if (std::holds_alternative<Matrix<L>>((*l->items)[0].v)) return prune_list<L>(*l, index, single);
    if (std::holds_alternative<Matrix<B>>((*l->items)[0].v)) return prune_list<B>(*l, index, single);
    bad(name, target);
  }

  template <class Ring>
  static ChainComplex<Ring> prune_at(const ChainComplex<Ring>& c, long i, bool single) {
    if (i < 1 || static_cast<std::size_t>(i) > c.length()) {
      throw IndexOutOfRange("differential index " + std::to_string(i) + " out of range");
    }
    Pruner<Ring> p(c);
    if (single) {
      if (!p.prune_one(static_cast<std::size_t>(i))) throw NotAUnit("differential has no unit entry");
    } else {
      p.prune_diff(static_cast<std::size_t>(i));
    }
    return p.take_complex();
  }

  template <class Ring>
  V prune_list(const ListVal<F>& l, long index, bool single) {
    std::vector<Matrix<Ring>> diffs;
    for (const auto& x : *l.items) {
      auto* m = std::get_if<Matrix<Ring>>(&x.v);
      if (!m) throw std::invalid_argument("pruneDiff expects a list of matrices over one ring");
      diffs.push_back(*m);
    }
    auto ring = diffs[0].ring_ptr();
    ChainComplex<Ring> c(ring, std::move(diffs));
    auto pruned = prune_at(c, index + 1, single);
    std::vector<V> out;
    for (const auto& d : pruned.differentials()) out.push_back(V{d});
    return make_list(std::move(out));
  }

  V syz(const V& v) {
    if (auto* m = std::get_if<Matrix<B>>(&v.v)) return V{syz_base(*m)};
    if (auto* m = std::get_if<Matrix<L>>(&v.v)) return V{syz_local(*m)};
    if (auto* I = std::get_if<Ideal<B>>(&v.v)) return V{syz_base(I->matrix())};
    if (auto* I = std::get_if<Ideal<L>>(&v.v)) return V{syz_local(I->matrix())};
    bad("syz", v);
  }

  V min_gens(const V& v) {
    if (auto* M = std::get_if<SubquotientModule<L>>(&v.v)) return V{mingens(*M)};
    if (auto* I = std::get_if<Ideal<L>>(&v.v)) return V{mingens(LocalModule<F>::image(I->matrix()))};
    if (auto* m = std::get_if<Matrix<L>>(&v.v)) return V{mingens(LocalModule<F>::image(*m))};
    auto trim = [](const Matrix<B>& m) { return trim_columns(m, std::vector<long>(m.rows(), 0)); };
    if (auto* I = std::get_if<Ideal<B>>(&v.v)) return V{trim(I->matrix())};
    if (auto* m = std::get_if<Matrix<B>>(&v.v)) return V{trim(*m)};
    if (auto* M = std::get_if<SubquotientModule<B>>(&v.v)) {
      if (M->kind() == BaseModule<F>::Kind::Image) return V{trim(M->generators())};
      return V{M->generators()};
    }
    bad("mingens", v);
  }

  V hsf(const std::string& name, const std::vector<V>& args) {
    arity(name, args, 2, 3);
    const V& mv = args[args.size() - 2];
    long n = to_long(args.back(), "n");
    if (n < 0) throw std::invalid_argument(name + ": n must be non-negative");
    auto M = local_module(name, mv);
    const auto& RP = M.ring_ptr();
    std::optional<ParameterIdeal<F>> q;
    if (args.size() == 3) {
      auto qv = to_local(args[0], RP);
      if (auto* I = std::get_if<Ideal<L>>(&qv.v)) {
        q.emplace(*I);
      } else {
        q.emplace(std::get<Ideal<L>>(make_ideal({qv}).v));
      }
    } else {
      q.emplace(ParameterIdeal<F>::maximal(RP));
    }
    auto value = hilbert_samuel_function(*q, M, static_cast<std::size_t>(n), opts_.cap);
    return V{mpz_class(static_cast<unsigned long>(value))};
  }

  V modulo(const V& f, const V& g) {
    if (auto RP = local_ring_of(f) ? local_ring_of(f) : local_ring_of(g)) {
      auto lf = lift_up_with_scales(std::get<Matrix<L>>(to_local(f, RP).v));
      auto lg = lift_up(std::get<Matrix<L>>(to_local(g, RP).v));
      return V{local_diagonal(RP, lf.scales) * promote(modulo_base(lf.matrix, lg), RP)};
    }
    auto* a = std::get_if<Matrix<B>>(&f.v);
    auto* b = std::get_if<Matrix<B>>(&g.v);
    if (!a || !b) throw std::invalid_argument("modulo expects two matrices");
    return V{modulo_base(*a, *b)};
  }

  /// Kernel of k[x_0..x_n] -> k[s,t], x_i -> s^(d-a_i) t^(a_i), with
  /// a_0 = 0 and d the largest exponent; computed by lex elimination.
  V monomial_curve(const V& ring, const V& exps) {
    auto* r = std::get_if<RingRef<B>>(&ring.v);
    if (!r) throw std::invalid_argument("monomialCurveIdeal expects a polynomial ring first");
    const auto& R = r->ring;
    std::vector<long> a{0};
    std::vector<V> items;
    flatten(exps, items);
    for (const auto& x : items) a.push_back(to_long(x, "exponent"));
    if (a.size() != R->nvars()) {
      throw ShapeMismatch("monomialCurveIdeal needs one exponent fewer than the number of variables");
    }
    long d = *std::max_element(a.begin(), a.end());
    std::vector<std::string> names{"s'", "t'"};
    names.insert(names.end(), R->variables().begin(), R->variables().end());
    auto S = make_poly_ring(R->field(), names, MonomialOrder::Lex);
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Monomial m(S->nvars());
      m.set(0, static_cast<Monomial::exponent_type>(d - a[i]));
      m.set(1, static_cast<Monomial::exponent_type>(a[i]));
      gens.push_back(S->variable(i + 2) - S->term(m, S->field().one()));
    }
    auto G = ideal_gb(S, gens);
    std::vector<Polynomial<F>> kept;
    for (const auto& g : G.polynomials()) {
      bool free_of_st = true;
      for (const auto& t : g.terms()) free_of_st = free_of_st && t.mono[0] == 0 && t.mono[1] == 0;
      if (!free_of_st) continue;
      std::vector<typename Polynomial<F>::Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m(R->nvars());
        for (std::size_t i = 0; i < R->nvars(); ++i) m.set(i, t.mono[i + 2]);
        terms.push_back({m, t.coeff});
      }
      kept.push_back(Polynomial<F>(*R, std::move(terms)));
    }
    Matrix<B> row(R, 1, kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) row.at(0, c) = kept[c];
    auto trimmed = trim_columns(row, std::vector<long>{0});
    return V{Ideal<B>(R, trimmed.row(0))};
  }

  Options opts_;
  std::map<std::string, V> env_;
  std::variant<std::monostate, RingRef<B>, RingRef<L>> current_;
  std::map<const void*, std::string> ring_names_;
  std::map<std::pair<const void*, std::string>, std::shared_ptr<const L>> local_cache_;
  bool has_ring_ = false;
  bool in_shorthand_ = false;
  Pos pos_;
};

/// A session whose coefficient field is fixed by the first ring literal.
/// Until a ring exists the session is over ZZ/p; a QQ literal at that point
/// switches to QQ and replays the earlier statements.
class AnySession {
 public:
  explicit AnySession(Options opts = {}) : opts_(opts), impl_(std::make_unique<Session<PrimeField>>(opts)) {}

  Record execute(const Statement& s) {
    if (auto* p = std::get_if<std::unique_ptr<Session<PrimeField>>>(&impl_)) {
      auto field = detail::literal_field(*s.expr);
      if (field == "QQ" && !(*p)->has_ring()) {
        auto q = std::make_unique<Session<RationalField>>(opts_);
        for (const auto& old : history_) q->execute(old);
        impl_ = std::move(q);
      }
    }
    Record r = std::visit([&](auto& impl) { return impl->execute(s); }, impl_);
    history_.push_back(s);
    return r;
  }

  std::string field() const {
    return std::holds_alternative<std::unique_ptr<Session<PrimeField>>>(impl_) ? "ZZ/p" : "QQ";
  }

 private:
  Options opts_;
  std::variant<std::unique_ptr<Session<PrimeField>>, std::unique_ptr<Session<RationalField>>> impl_;
  std::vector<Statement> history_;
};

}  // namespace locus::script
