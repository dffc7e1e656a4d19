#pragma once

// Shared fixtures: polynomial shorthand readers, seeded random generators and
// a script runner.

#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locus/locus.hpp"
#include "locus/script/parser.hpp"
#include "locus/script/session.hpp"

namespace locus::test {

using GF = PrimeField;
using QQ = RationalField;

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

inline std::vector<std::string> split_vars(const std::string& names) {
  std::vector<std::string> out;
  std::stringstream ss(names);
  std::string v;
  while (std::getline(ss, v, ',')) {
    v.erase(0, v.find_first_not_of(' '));
    v.erase(v.find_last_not_of(' ') + 1);
    out.push_back(v);
  }
  return out;
}

inline RingPtr<GF> gf_ring(const std::string& vars, MonomialOrder order = MonomialOrder::GRevLex,
                           std::uint32_t p = 32003) {
  return make_poly_ring(GF(p), split_vars(vars), order);
}

inline RingPtr<QQ> qq_ring(const std::string& vars, MonomialOrder order = MonomialOrder::GRevLex) {
  return make_poly_ring(QQ(), split_vars(vars), order);
}

namespace detail {

template <class F>
Polynomial<F> eval(const PolyRing<F>& R, const script::Expr& e) {
  using K = script::Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return R.constant(R.field().from_string(e.text));
    case K::Name:
      return R.variable(e.text);
    case K::Unary:
      return -eval(R, *e.args[0]);
    case K::Binary: {
      auto a = eval(R, *e.args[0]);
      if (e.text == "^") return a.pow(std::stol(e.args[1]->text));
      auto b = eval(R, *e.args[1]);
      if (e.text == "+") return a + b;
      if (e.text == "-") return a - b;
      return a * b;
    }
    default:
      throw std::invalid_argument("unsupported shorthand node");
  }
}

}  // namespace detail

/// Rows of polynomials: "a, b; c, d".
template <class F>
std::vector<std::vector<Polynomial<F>>> poly_rows(const PolyRing<F>& R, const std::string& text) {
  std::vector<std::vector<Polynomial<F>>> out;
  for (const auto& row : script::parse_shorthand(text)) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(detail::eval(R, *e));
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> polys(const PolyRing<F>& R, const std::string& text) {
  return poly_rows(R, text).at(0);
}

template <class F>
Polynomial<F> poly(const PolyRing<F>& R, const std::string& text) {
  return polys(R, text).at(0);
}

template <class F>
Matrix<PolyRing<F>> matrix(const RingPtr<F>& R, const std::string& text) {
  return Matrix<PolyRing<F>>::from_rows(R, poly_rows(*R, text));
}

template <class F>
Fraction<F> frac(const LocalRing<F>& RP, const std::string& num, const std::string& den) {
  return RP.fraction(poly(RP.base(), num), poly(RP.base(), den));
}

// ------------------------------------------------------------------ random

inline std::uint32_t uniform(std::mt19937& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

template <class F>
typename F::value_type random_coeff(const F& k, std::mt19937& rng, bool nonzero = false) {
  for (;;) {
    auto c = k.from_int(static_cast<long long>(uniform(rng, 0, 40)) - 20);
    if (!nonzero || !k.is_zero(c)) return c;
  }
}

inline Monomial random_monomial(std::size_t nvars, long max_deg, std::mt19937& rng) {
  Monomial m(nvars);
  long d = uniform(rng, 0, static_cast<std::uint32_t>(max_deg));
  for (long i = 0; i < d; ++i) {
    auto v = uniform(rng, 0, static_cast<std::uint32_t>(nvars - 1));
    m.set(v, m[v] + 1);
  }
  return m;
}

template <class F>
Polynomial<F> random_poly(const PolyRing<F>& R, std::mt19937& rng, long max_deg = 2,
                          std::size_t max_terms = 3) {
  std::vector<typename Polynomial<F>::Term> terms;
  auto n = uniform(rng, 0, static_cast<std::uint32_t>(max_terms));
  for (std::uint32_t i = 0; i < n; ++i) {
    terms.push_back({random_monomial(R.nvars(), max_deg, rng), random_coeff(R.field(), rng, true)});
  }
  return Polynomial<F>(R, std::move(terms));
}

template <class F>
Polynomial<F> random_nonzero_poly(const PolyRing<F>& R, std::mt19937& rng, long max_deg = 2,
                                  std::size_t max_terms = 3) {
  for (;;) {
    auto p = random_poly(R, rng, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

template <class F>
Matrix<PolyRing<F>> random_matrix(const RingPtr<F>& R, std::size_t rows, std::size_t cols,
                                  std::mt19937& rng, long max_deg = 2, std::size_t max_terms = 2) {
  Matrix<PolyRing<F>> m(R, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_poly(*R, rng, max_deg, max_terms);
  }
  return m;
}

/// A random element of R outside P, found by rejection.
template <class F>
Polynomial<F> random_unit_den(const LocalRing<F>& RP, std::mt19937& rng) {
  for (;;) {
    auto d = random_poly(RP.base(), rng, 1, 2) + RP.base().from_int(uniform(rng, 1, 5));
    if (!RP.in_prime(d)) return d;
  }
}

// ------------------------------------------------------------------ scripts

/// Unsuppressed results of a script, in order.
inline std::vector<std::string> run_script(const std::string& text, script::Options opts = {}) {
  auto parsed = script::parse_script(text);
  script::AnySession session(opts);
  std::vector<std::string> out;
  for (const auto& st : parsed.statements) {
    auto rec = session.execute(st);
    if (!rec.suppressed && !rec.result.empty()) out.push_back(rec.result);
  }
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace locus::test
