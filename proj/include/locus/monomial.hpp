#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>

#include <boost/container/small_vector.hpp>

#include "locus/error.hpp"

namespace locus {

enum class MonomialOrder { GRevLex, Lex, GLex };

inline std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GRevLex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GLex: return "glex";
  }
  return "?";
}

inline MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::GRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "glex" || name == "graded-lex") return MonomialOrder::GLex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

/// Exponent vector with its cached total degree.
class Monomial {
 public:
  using exponent_type = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {
    for (auto e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      degree_ += e;
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t index, exponent_type power = 1) {
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_type operator[](std::size_t i) const noexcept { return exps_[i]; }
  long degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, exponent_type e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e - exps_[i];
    exps_[i] = e;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      long e = static_cast<long>(r.exps_[i]) + b.exps_[i];
      if (e > std::numeric_limits<exponent_type>::max()) {
        throw Error("exponent overflow");
      }
      r.exps_[i] = static_cast<exponent_type>(e);
    }
    r.degree_ += b.degree_;
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    r.degree_ -= b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    r.degree_ = 0;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  Monomial pow(long n) const {
    Monomial r(*this);
    for (auto& e : r.exps_) e = static_cast<exponent_type>(e * n);
    r.degree_ = degree_ * n;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<exponent_type, 8> exps_;
  long degree_ = 0;
};

/// Three-way comparison under a monomial order: >0 when a > b.
inline int compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = a.size();
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::GLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::GRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
  }
  return 0;
}

}  // namespace locus
