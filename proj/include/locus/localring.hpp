#pragma once

// The localization R_P of a polynomial ring at a prime ideal P. Elements are
// fractions num/den with den outside P. Fractions are never reduced by a GCD;
// equality is decided by cross-multiplication.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "locus/error.hpp"
#include "locus/groebner.hpp"
#include "locus/matrix.hpp"
#include "locus/poly.hpp"

namespace locus {

template <class F>
struct Fraction {
  Polynomial<F> num;
  Polynomial<F> den;
};

/// R_P. Primality of P is the caller's responsibility; properness is checked.
template <class F>
class LocalRing {
 public:
  using field_type = F;
  using element_type = Fraction<F>;
  using base_type = PolyRing<F>;

  LocalRing(std::shared_ptr<const PolyRing<F>> base, std::vector<Polynomial<F>> prime)
      : base_(std::move(base)), prime_(std::move(prime)), gb_(ideal_gb(base_, prime_)) {
    for (const auto& p : prime_) {
      if (!p.is_zero() && p.ring_ptr() != base_.get()) throw RingMismatch();
    }
    if (gb_.is_unit_ideal()) throw UnitIdeal();
    // When P is generated by variables, membership is a per-term check.
    variable_prime_ = true;
    variable_mask_.assign(base_->nvars(), false);
    for (const auto& g : gb_.polynomials()) {
      if (g.size() != 1 || g.lead_monomial().degree() != 1) {
        variable_prime_ = false;
        break;
      }
      for (std::size_t i = 0; i < base_->nvars(); ++i) {
        if (g.lead_monomial()[i] == 1) variable_mask_[i] = true;
      }
    }
  }
  LocalRing(const LocalRing&) = delete;
  LocalRing& operator=(const LocalRing&) = delete;

  const PolyRing<F>& base() const noexcept { return *base_; }
  const std::shared_ptr<const PolyRing<F>>& base_ptr() const noexcept { return base_; }
  const F& field() const noexcept { return base_->field(); }
  const std::vector<Polynomial<F>>& prime() const noexcept { return prime_; }
  const GroebnerBasis<F>& prime_gb() const noexcept { return gb_; }
  std::size_t nvars() const noexcept { return base_->nvars(); }

  bool in_prime(const Polynomial<F>& f) const {
    if (f.is_zero()) return true;
    if (variable_prime_) {
      for (const auto& t : f.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i < t.mono.size() && !hit; ++i) {
          hit = variable_mask_[i] && t.mono[i] > 0;
        }
        if (!hit) return false;
      }
      return true;
    }
    return contains(gb_, f);
  }

  /// Normal form of f modulo the prime.
  Polynomial<F> reduce(const Polynomial<F>& f) const {
    if (f.is_zero()) return f;
    if (variable_prime_) {
      std::vector<typename Polynomial<F>::Term> kept;
      for (const auto& t : f.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i < t.mono.size() && !hit; ++i) {
          hit = variable_mask_[i] && t.mono[i] > 0;
        }
        if (!hit) kept.push_back(t);
      }
      return Polynomial<F>::from_sorted(*base_, std::move(kept));
    }
    return normal_form(f, gb_);
  }

  /// A representative of the image of a in the residue field R_P / P R_P.
  Fraction<F> residue(const Fraction<F>& a) const {
    return normalize(reduce(a.num), reduce(a.den));
  }

  /// num/den, normalized: zero becomes 0/1 and the denominator is made monic.
  Fraction<F> fraction(Polynomial<F> num, Polynomial<F> den) const {
    check(num);
    check(den);
    if (den.is_zero()) throw DivisionByZero();
    if (in_prime(den)) throw NotAUnit("denominator " + den.to_string() + " lies in the prime");
    return normalize(std::move(num), std::move(den));
  }

  Fraction<F> promote(const Polynomial<F>& f) const {
    check(f);
    return {f, base_->one()};
  }

  Fraction<F> zero() const { return {base_->zero(), base_->one()}; }
  Fraction<F> one() const { return {base_->one(), base_->one()}; }
  Fraction<F> from_int(long long n) const { return promote(base_->from_int(n)); }

  Fraction<F> add(const Fraction<F>& a, const Fraction<F>& b) const {
    if (a.num.is_zero()) return b;
    if (b.num.is_zero()) return a;
    if (a.den == b.den) return normalize(a.num + b.num, a.den);
    return normalize(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  Fraction<F> neg(const Fraction<F>& a) const { return {-a.num, a.den}; }
  Fraction<F> sub(const Fraction<F>& a, const Fraction<F>& b) const { return add(a, neg(b)); }
  Fraction<F> mul(const Fraction<F>& a, const Fraction<F>& b) const {
    if (a.num.is_zero() || b.num.is_zero()) return zero();
    return normalize(a.num * b.num, a.den * b.den);
  }

  bool is_zero(const Fraction<F>& a) const { return a.num.is_zero(); }
  bool equal(const Fraction<F>& a, const Fraction<F>& b) const {
    if (a.den == b.den) return a.num == b.num;
    return a.num * b.den == b.num * a.den;
  }
  bool is_unit(const Fraction<F>& a) const { return !in_prime(a.num); }
  /// Both parts constant, so the element is a field scalar.
  bool is_scalar(const Fraction<F>& a) const { return a.num.is_constant() && a.den.is_constant(); }
  Fraction<F> unit_inverse(const Fraction<F>& a) const {
    if (!is_unit(a)) throw NotAUnit("not a unit: " + to_string(a));
    return normalize(a.den, a.num);
  }

  std::string to_string(const Fraction<F>& a) const {
    if (a.den.is_constant()) return a.num.to_string();
    auto wrap = [](const Polynomial<F>& p) {
      std::string s = p.to_string();
      return p.size() > 1 ? "(" + s + ")" : s;
    };
    std::string den = a.den.to_string();
    bool plain = a.den.size() == 1 && den.find('*') == std::string::npos;
    return wrap(a.num) + "/" + (plain ? den : "(" + den + ")");
  }

 private:
  void check(const Polynomial<F>& f) const {
    if (!f.is_zero() && f.ring_ptr() != base_.get()) throw RingMismatch();
  }

  Fraction<F> normalize(Polynomial<F> num, Polynomial<F> den) const {
    if (num.is_zero()) return zero();
    const F& k = field();
    if (!k.is_one(den.lead_coeff())) {
      auto inv = k.inv(den.lead_coeff());
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return {std::move(num), std::move(den)};
  }

  std::shared_ptr<const PolyRing<F>> base_;
  std::vector<Polynomial<F>> prime_;
  GroebnerBasis<F> gb_;
  bool variable_prime_ = false;
  std::vector<bool> variable_mask_;
};

template <class F>
std::shared_ptr<const LocalRing<F>> make_local_ring(std::shared_ptr<const PolyRing<F>> base,
                                                    std::vector<Polynomial<F>> prime) {
  return std::make_shared<const LocalRing<F>>(std::move(base), std::move(prime));
}

template <class F>
Matrix<LocalRing<F>> promote(const Matrix<PolyRing<F>>& m,
                             const std::shared_ptr<const LocalRing<F>>& RP) {
  if (m.ring_ptr().get() != &RP->base()) throw RingMismatch();
  std::vector<Fraction<F>> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(RP->promote(m(r, c)));
  }
  return Matrix<LocalRing<F>>(RP, m.rows(), m.cols(), std::move(entries));
}

template <class F>
std::vector<Fraction<F>> promote(const std::vector<Polynomial<F>>& gens, const LocalRing<F>& RP) {
  std::vector<Fraction<F>> out;
  for (const auto& g : gens) out.push_back(RP.promote(g));
  return out;
}

template <class F>
struct LiftedMatrix {
  Matrix<PolyRing<F>> matrix;
  /// scales[c] is the denominator multiple that column c was multiplied by.
  std::vector<Polynomial<F>> scales;
};

/// Clears denominators column by column, using the product of the distinct
/// denominators in each column as the common multiple.
template <class F>
LiftedMatrix<F> lift_up_with_scales(const Matrix<LocalRing<F>>& m) {
  const auto& RP = m.ring();
  const auto& R = RP.base_ptr();
  Matrix<PolyRing<F>> out(R, m.rows(), m.cols());
  std::vector<Polynomial<F>> scales;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Polynomial<F>> dens;
    std::vector<std::size_t> which(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto& e = m(r, c);
      if (e.num.is_zero()) continue;
      std::size_t k = 0;
      while (k < dens.size() && !(dens[k] == e.den)) ++k;
      if (k == dens.size()) dens.push_back(e.den);
      which[r] = k;
    }
    Polynomial<F> scale = R->one();
    for (const auto& d : dens) scale *= d;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto& e = m(r, c);
      if (e.num.is_zero()) continue;
      Polynomial<F> v = e.num;
      for (std::size_t k = 0; k < dens.size(); ++k) {
        if (k != which[r]) v *= dens[k];
      }
      out.at(r, c) = std::move(v);
    }
    scales.push_back(std::move(scale));
  }
  return {std::move(out), std::move(scales)};
}

template <class F>
Matrix<PolyRing<F>> lift_up(const Matrix<LocalRing<F>>& m) {
  return lift_up_with_scales(m).matrix;
}

/// Diagonal matrix over R_P with the given base-ring entries.
template <class F>
Matrix<LocalRing<F>> local_diagonal(const std::shared_ptr<const LocalRing<F>>& RP,
                                    const std::vector<Polynomial<F>>& d) {
  Matrix<LocalRing<F>> m(RP, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = RP->promote(d[i]);
  return m;
}

}  // namespace locus
