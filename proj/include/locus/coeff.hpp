#pragma once

// Exact coefficient fields: prime fields GF(p) and the rationals.
//
// Field objects are small descriptors; elements are plain values whose
// arithmetic is routed through the descriptor. FieldElem bundles the two for
// callers that want operator syntax and mismatch checking.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "locus/error.hpp"

namespace locus {

class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (1u << 31)) {
      throw std::invalid_argument("characteristic must be a prime below 2^31");
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
      }
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "ZZ/" + std::to_string(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }

  value_type from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type from_mpz(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }

  /// Parses a decimal integer (optionally signed) and reduces it mod p.
  value_type from_string(std::string_view text) const {
    return from_mpz(mpz_class(std::string(text), 10));
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }

  value_type inv(value_type a) const {
    if (a == 0) throw DivisionByZero();
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }

  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  /// Balanced representative: values above p/2 print as negatives.
  std::string to_string(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool is_negative(value_type a) const noexcept { return a > p_ / 2; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// QQ backed by GMP rationals (always kept canonical).
class RationalField {
 public:
  using value_type = mpq_class;

  std::string name() const { return "QQ"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const {
    return value_type(mpz_class(std::to_string(n), 10));
  }
  value_type from_mpz(const mpz_class& n) const { return value_type(n); }
  value_type from_string(std::string_view text) const {
    value_type q(std::string(text), 10);
    q.canonicalize();
    return q;
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DivisionByZero();
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    return mul(a, inv(b));
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

/// A field element tied to its field, for operator-style arithmetic.
template <class Field>
class FieldElem {
 public:
  using value_type = typename Field::value_type;

  FieldElem(const Field& field, value_type v) : field_(&field), v_(std::move(v)) {}

  const Field& field() const noexcept { return *field_; }
  const value_type& value() const noexcept { return v_; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {*a.field_, a.field_->add(a.v_, b.v_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {*a.field_, a.field_->sub(a.v_, b.v_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {*a.field_, a.field_->mul(a.v_, b.v_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return {*a.field_, a.field_->div(a.v_, b.v_)};
  }
  FieldElem operator-() const { return {*field_, field_->neg(v_)}; }
  FieldElem inv() const { return {*field_, field_->inv(v_)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    a.check(b);
    return a.field_->equal(a.v_, b.v_);
  }

  std::string to_string() const { return field_->to_string(v_); }

 private:
  void check(const FieldElem& other) const {
    if (!(*field_ == *other.field_)) throw FieldMismatch();
  }

  const Field* field_;
  value_type v_;
};

}  // namespace locus
