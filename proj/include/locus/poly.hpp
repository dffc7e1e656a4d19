#pragma once

// Multivariate polynomials over an exact field with a fixed monomial order.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "locus/coeff.hpp"
#include "locus/error.hpp"
#include "locus/monomial.hpp"

namespace locus {

template <class F>
class PolyRing;

template <class F>
class Polynomial {
 public:
  using field_type = F;
  using coeff_type = typename F::value_type;
  using ring_type = PolyRing<F>;

  struct Term {
    Monomial mono;
    coeff_type coeff;
  };

  Polynomial() = default;
  explicit Polynomial(const PolyRing<F>& ring) : ring_(&ring) {}

  /// Builds from arbitrary terms: sorts, merges like monomials, drops zeros.
  Polynomial(const PolyRing<F>& ring, std::vector<Term> terms) : ring_(&ring) {
    const F& k = ring.field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ring.compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
        if (k.is_zero(terms_.back().coeff)) terms_.pop_back();
      } else if (!k.is_zero(t.coeff)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  /// Wraps terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(const PolyRing<F>& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
  }

  const PolyRing<F>& ring() const noexcept { return *ring_; }
  const PolyRing<F>* ring_ptr() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& lead_term() const {
    if (terms_.empty()) throw ZeroPolynomial("lead term");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead_term().mono; }
  const coeff_type& lead_coeff() const { return lead_term().coeff; }

  long total_degree() const {
    if (terms_.empty()) throw ZeroPolynomial("total degree");
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Coefficient of the constant monomial (zero when absent).
  coeff_type constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return ring_->field().zero();
  }

  Polynomial scaled(const coeff_type& c) const {
    const F& k = ring_->field();
    if (k.is_zero(c)) return Polynomial(*ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
    return r;
  }

  Polynomial times_term(const Monomial& m, const coeff_type& c) const {
    const F& k = ring_->field();
    if (k.is_zero(c)) return Polynomial(*ring_);
    Polynomial r(*ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, k.mul(t.coeff, c)});
    return r;
  }

  /// this + c * m * g
  Polynomial axpy(const coeff_type& c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    const F& k = ring_->field();
    const PolyRing<F>& R = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : R.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), k.mul(c, g.terms_[j].coeff)});
        ++j;
      } else {
        coeff_type s = k.add(terms_[i].coeff, k.mul(c, g.terms_[j].coeff));
        if (!k.is_zero(s)) out.push_back({std::move(gm), std::move(s)});
        ++i;
        ++j;
      }
    }
    return from_sorted(R, std::move(out));
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    return f.axpy(f.ring_->field().one(), Monomial(f.ring_->nvars()), g);
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    const F& k = f.ring_->field();
    return f.axpy(k.neg(k.one()), Monomial(f.ring_->nvars()), g);
  }
  Polynomial operator-() const { return scaled(ring_->field().neg(ring_->field().one())); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(*f.ring_);
    if (g.terms_.size() == 1) return f.times_term(g.terms_[0].mono, g.terms_[0].coeff);
    if (f.terms_.size() == 1) return g.times_term(f.terms_[0].mono, f.terms_[0].coeff);
    const F& k = f.ring_->field();
    std::vector<Term> prod;
    prod.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
    }
    return Polynomial(*f.ring_, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    Polynomial result = ring_->one();
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Scales so the lead coefficient is one (zero stays zero).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(lead_coeff()));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.terms_.size() != g.terms_.size()) return false;
    if (f.terms_.empty()) return true;
    f.check_ring(g);
    const F& k = f.ring_->field();
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      if (!(f.terms_[i].mono == g.terms_[i].mono) ||
          !k.equal(f.terms_[i].coeff, g.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const {
    if (ring_ != g.ring_) throw RingMismatch();
  }

  const PolyRing<F>* ring_ = nullptr;
  std::vector<Term> terms_;
};

/// k[x_1..x_r] with a recorded monomial order. Elements point back at the
/// ring, so rings live behind shared_ptr and never move.
template <class F>
class PolyRing {
 public:
  using field_type = F;
  using element_type = Polynomial<F>;
  using coeff_type = typename F::value_type;

  PolyRing(F field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::GRevLex)
      : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
    if (vars_.size() > 64) throw std::invalid_argument("at most 64 variables");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(v).second) {
        throw std::invalid_argument("duplicate variable '" + v + "'");
      }
    }
  }
  PolyRing(const PolyRing&) = delete;
  PolyRing& operator=(const PolyRing&) = delete;

  const F& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  MonomialOrder order() const noexcept { return order_; }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return locus::compare(order_, a, b);
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    return std::nullopt;
  }

  Polynomial<F> zero() const { return Polynomial<F>(*this); }
  Polynomial<F> one() const { return constant(field_.one()); }
  Polynomial<F> constant(const coeff_type& c) const {
    return term(Monomial(nvars()), c);
  }
  Polynomial<F> from_int(long long n) const { return constant(field_.from_int(n)); }
  Polynomial<F> term(const Monomial& m, const coeff_type& c) const {
    if (field_.is_zero(c)) return zero();
    return Polynomial<F>::from_sorted(*this, {{m, c}});
  }
  Polynomial<F> variable(std::size_t i) const {
    if (i >= nvars()) throw IndexOutOfRange("variable index out of range");
    return term(Monomial::variable(nvars(), i), field_.one());
  }
  Polynomial<F> variable(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw Error("unknown variable '" + name + "'");
    return variable(*i);
  }
  std::vector<Polynomial<F>> variables_as_polys() const {
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < nvars(); ++i) out.push_back(variable(i));
    return out;
  }

  // Ring interface shared with LocalRing (consumed by Matrix and pruning).
  Polynomial<F> add(const Polynomial<F>& a, const Polynomial<F>& b) const { return a + b; }
  Polynomial<F> sub(const Polynomial<F>& a, const Polynomial<F>& b) const { return a - b; }
  Polynomial<F> mul(const Polynomial<F>& a, const Polynomial<F>& b) const { return a * b; }
  Polynomial<F> neg(const Polynomial<F>& a) const { return -a; }
  bool is_zero(const Polynomial<F>& a) const { return a.is_zero(); }
  bool equal(const Polynomial<F>& a, const Polynomial<F>& b) const { return a == b; }
  /// Units of the polynomial ring are the nonzero constants.
  bool is_unit(const Polynomial<F>& a) const { return !a.is_zero() && a.is_constant(); }
  bool is_scalar(const Polynomial<F>& a) const { return a.is_constant(); }
  Polynomial<F> unit_inverse(const Polynomial<F>& a) const {
    if (!is_unit(a)) throw NotAUnit("not a unit: " + a.to_string());
    return constant(field_.inv(a.constant_coeff()));
  }
  std::string to_string(const Polynomial<F>& a) const { return a.to_string(); }

 private:
  F field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <class F>
std::shared_ptr<const PolyRing<F>> make_poly_ring(F field, std::vector<std::string> vars,
                                                  MonomialOrder order = MonomialOrder::GRevLex) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(vars), order);
}

namespace detail {

template <class F>
std::string monomial_string(const PolyRing<F>& R, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += R.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& k = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = k.is_negative(t.coeff);
    coeff_type mag = negative ? k.neg(t.coeff) : t.coeff;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.mono.is_one()) {
      out += k.to_string(mag);
    } else {
      if (!k.is_one(mag)) out += k.to_string(mag) + '*';
      out += detail::monomial_string(*ring_, t.mono);
    }
  }
  return out;
}

}  // namespace locus
