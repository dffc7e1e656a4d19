#pragma once

// Pruning: eliminating unit entries of differentials, each elimination
// splitting off a trivial summand u : R -> R of the complex. Works over any
// ring type with the Matrix ring interface; the unit predicate is the ring's.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "locus/chain_complex.hpp"
#include "locus/error.hpp"
#include "locus/localring.hpp"
#include "locus/matrix.hpp"

namespace locus {

/// Change of basis accumulated while pruning. Stored as an event log and
/// replayed on demand, per homological degree:
///   basis(d)   original rank x current rank, the surviving basis of F_d
///   change(d)  square; surviving columns followed by split-off columns
///   inverse(d) two-sided inverse of change(d)
/// basis(d) is a chain map: d_orig * basis(d) == basis(d-1) * d_pruned.
template <class Ring>
class PruningMap {
 public:
  using element_type = typename Ring::element_type;
  using matrix_type = Matrix<Ring>;

  PruningMap() = default;
  PruningMap(std::shared_ptr<const Ring> ring, std::vector<std::size_t> ranks)
      : ring_(std::move(ring)), ranks_(std::move(ranks)) {}

  struct Swap {
    std::size_t degree, a, b;
  };
  /// Basis of F_i replaced by e_0, s*e_j - t_j*e_0 (j >= 1); bases of higher
  /// degrees scaled by s; e_0 and its image in F_{i-1} split off.
  struct Eliminate {
    std::size_t i;
    element_type s;
    std::vector<element_type> t;
  };

  void record_swap(std::size_t degree, std::size_t a, std::size_t b) {
    if (a != b) events_.emplace_back(Swap{degree, a, b});
  }
  void record_elimination(std::size_t i, element_type s, std::vector<element_type> t) {
    events_.emplace_back(Eliminate{i, std::move(s), std::move(t)});
  }

  std::size_t degrees() const noexcept { return ranks_.size(); }
  std::size_t original_rank(std::size_t d) const { return d < ranks_.size() ? ranks_[d] : 0; }
  std::size_t eliminations() const {
    std::size_t n = 0;
    for (const auto& e : events_) n += std::holds_alternative<Eliminate>(e) ? 1 : 0;
    return n;
  }

  matrix_type basis(std::size_t d) const { return replay(d).basis(); }
  matrix_type change(std::size_t d) const { return replay(d).change(); }
  matrix_type inverse(std::size_t d) const { return replay(d).inverse(); }

 private:
  struct State {
    std::shared_ptr<const Ring> ring_ptr;
    std::size_t n = 0;
    std::vector<std::vector<element_type>> cur, cur_rows;
    std::vector<std::vector<element_type>> split, split_rows;

    matrix_type basis() const { return matrix_type::from_columns(ring_ptr, n, cur); }
    matrix_type change() const {
      auto cols = cur;
      cols.insert(cols.end(), split.begin(), split.end());
      return matrix_type::from_columns(ring_ptr, n, cols);
    }
    matrix_type inverse() const {
      auto rows = cur_rows;
      rows.insert(rows.end(), split_rows.begin(), split_rows.end());
      if (rows.empty()) return matrix_type(ring_ptr, 0, 0);
      return matrix_type::from_rows(ring_ptr, rows);
    }
  };

  State replay(std::size_t d) const {
    const Ring& R = *ring_;
    State st;
    st.ring_ptr = ring_;
    st.n = original_rank(d);
    for (std::size_t j = 0; j < st.n; ++j) {
      std::vector<element_type> unit(st.n, R.zero());
      unit[j] = R.one();
      st.cur.push_back(unit);
      st.cur_rows.push_back(unit);
    }
    auto scale = [&](std::vector<element_type>& v, const element_type& c) {
      for (auto& x : v) x = R.mul(c, x);
    };
    auto axpy = [&](std::vector<element_type>& v, const element_type& c,
                    const std::vector<element_type>& w) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = R.add(v[k], R.mul(c, w[k]));
    };
    for (const auto& ev : events_) {
      if (const auto* sw = std::get_if<Swap>(&ev)) {
        if (sw->degree != d) continue;
        std::swap(st.cur[sw->a], st.cur[sw->b]);
        std::swap(st.cur_rows[sw->a], st.cur_rows[sw->b]);
        continue;
      }
      const auto& el = std::get<Eliminate>(ev);
      if (el.i == d + 1) {
        st.split.push_back(std::move(st.cur.front()));
        st.split_rows.push_back(std::move(st.cur_rows.front()));
        st.cur.erase(st.cur.begin());
        st.cur_rows.erase(st.cur_rows.begin());
      } else if (el.i == d) {
        const auto s_inv = R.unit_inverse(el.s);
        auto e0 = st.cur.front();
        auto r0 = st.cur_rows.front();
        for (std::size_t j = 1; j < st.cur.size(); ++j) {
          scale(st.cur[j], el.s);
          axpy(st.cur[j], R.neg(el.t[j - 1]), e0);
          scale(st.cur_rows[j], s_inv);
          axpy(r0, el.t[j - 1], st.cur_rows[j]);
        }
        st.split.push_back(std::move(e0));
        st.split_rows.push_back(std::move(r0));
        st.cur.erase(st.cur.begin());
        st.cur_rows.erase(st.cur_rows.begin());
      } else if (el.i < d && !R.equal(el.s, R.one())) {
        const auto s_inv = R.unit_inverse(el.s);
        for (auto& c : st.cur) scale(c, el.s);
        for (auto& r : st.cur_rows) scale(r, s_inv);
      }
    }
    return st;
  }

  std::shared_ptr<const Ring> ring_;
  std::vector<std::size_t> ranks_;
  std::vector<std::variant<Swap, Eliminate>> events_;
};

/// Position of the unit entry of `m` with the sparsest row plus column,
/// ties broken by (row, col).
template <class Ring>
std::optional<std::pair<std::size_t, std::size_t>> find_suitable_unit(const Matrix<Ring>& m) {
  const Ring& R = m.ring();
  std::vector<std::size_t> row_nnz(m.rows(), 0), col_nnz(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!R.is_zero(m(r, c))) {
        ++row_nnz[r];
        ++col_nnz[c];
      }
    }
  }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_score = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      if (R.is_zero(e)) continue;
      std::size_t score = row_nnz[r] + col_nnz[c];
      if (best && score >= best_score) continue;
      if (!R.is_unit(e)) continue;
      best = {r, c};
      best_score = score;
    }
  }
  return best;
}

template <class Ring>
class Pruner {
 public:
  using element_type = typename Ring::element_type;

  using Reducer = std::function<element_type(const element_type&)>;

  /// With a reducer, every entry produced by an elimination is passed
  /// through it (used to work modulo the maximal ideal).
  explicit Pruner(ChainComplex<Ring> c, Reducer reduce = nullptr)
      : c_(std::move(c)), reduce_(std::move(reduce)) {
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i <= c_.length(); ++i) ranks.push_back(c_.rank(i));
    map_ = PruningMap<Ring>(c_.ring_ptr(), std::move(ranks));
  }

  const ChainComplex<Ring>& complex() const noexcept { return c_; }
  const PruningMap<Ring>& map() const noexcept { return map_; }
  ChainComplex<Ring> take_complex() { return std::move(c_); }
  PruningMap<Ring> take_map() { return std::move(map_); }

  /// Eliminates the unit at (0,0) of d_i.
  void prune_unit(std::size_t i) {
    const Ring& R = c_.ring();
    auto& A = c_.differential(i);
    if (A.rows() == 0 || A.cols() == 0 || !R.is_unit(A(0, 0))) {
      throw NotAUnit("pivot of differential " + std::to_string(i) + " is not a unit");
    }
    const element_type u = A(0, 0);
    const bool scalar = R.is_scalar(u);
    const element_type u_inv = scalar ? R.unit_inverse(u) : R.one();
    const element_type s = scalar ? R.one() : u;

    std::vector<element_type> t;
    for (std::size_t j = 1; j < A.cols(); ++j) t.push_back(scalar ? R.mul(A(0, j), u_inv) : A(0, j));

    Matrix<Ring> reduced(c_.ring_ptr(), A.rows() - 1, A.cols() - 1);
    for (std::size_t r = 1; r < A.rows(); ++r) {
      const auto& ar0 = A(r, 0);
      for (std::size_t j = 1; j < A.cols(); ++j) {
        element_type v = scalar ? A(r, j) : R.mul(u, A(r, j));
        if (!R.is_zero(ar0) && !R.is_zero(t[j - 1])) v = R.sub(v, R.mul(ar0, t[j - 1]));
        if (reduce_) v = reduce_(v);
        reduced.at(r - 1, j - 1) = std::move(v);
      }
    }
    A = std::move(reduced);
    if (i > 1) c_.differential(i - 1).delete_col(0);
    if (i < c_.length()) c_.differential(i + 1).delete_row(0);
    map_.record_elimination(i, s, std::move(t));
  }

  /// Moves the most suitable unit of d_i to (0,0) and eliminates it.
  /// Returns false when d_i has no unit.
  bool prune_one(std::size_t i) {
    auto pos = find_suitable_unit(c_.differential(i));
    if (!pos) return false;
    auto [r, c] = *pos;
    if (r != 0) {
      c_.differential(i).swap_rows(0, r);
      if (i > 1) c_.differential(i - 1).swap_cols(0, r);
      map_.record_swap(i - 1, 0, r);
    }
    if (c != 0) {
      c_.differential(i).swap_cols(0, c);
      if (i < c_.length()) c_.differential(i + 1).swap_rows(0, c);
      map_.record_swap(i, 0, c);
    }
    prune_unit(i);
    return true;
  }

  /// Removes every unit of d_i. Returns the number of eliminations.
  std::size_t prune_diff(std::size_t i) {
    std::size_t count = 0;
    while (prune_one(i)) ++count;
    return count;
  }

  /// Ascending passes over all differentials until a pass eliminates nothing.
  std::size_t prune_all() {
    std::size_t total = 0;
    for (;;) {
      std::size_t pass = 0;
      for (std::size_t i = 1; i <= c_.length(); ++i) pass += prune_diff(i);
      total += pass;
      if (pass == 0) break;
    }
    return total;
  }

 private:
  ChainComplex<Ring> c_;
  Reducer reduce_;
  PruningMap<Ring> map_;
};

template <class Ring>
struct PrunedComplex {
  ChainComplex<Ring> complex;
  PruningMap<Ring> map;
};

template <class Ring>
ChainComplex<Ring> prune_unit(ChainComplex<Ring> c, std::size_t i) {
  Pruner<Ring> p(std::move(c));
  p.prune_unit(i);
  return p.take_complex();
}

template <class Ring>
ChainComplex<Ring> prune_diff(ChainComplex<Ring> c, std::size_t i) {
  Pruner<Ring> p(std::move(c));
  p.prune_diff(i);
  return p.take_complex();
}

template <class Ring>
PrunedComplex<Ring> prune_complex(ChainComplex<Ring> c) {
  Pruner<Ring> p(std::move(c));
  p.prune_all();
  return {p.take_complex(), p.take_map()};
}

template <class F>
ChainComplex<LocalRing<F>> tensor_to_local(const ChainComplex<PolyRing<F>>& c,
                                           const std::shared_ptr<const LocalRing<F>>& RP) {
  if (c.length() > 0 && c.ring_ptr().get() != &RP->base()) throw RingMismatch();
  if (c.length() == 0) return ChainComplex<LocalRing<F>>(RP, c.rank(0));
  std::vector<Matrix<LocalRing<F>>> diffs;
  for (const auto& d : c.differentials()) diffs.push_back(promote(d, RP));
  return ChainComplex<LocalRing<F>>(RP, std::move(diffs));
}

template <class Ring>
bool is_unit_free(const ChainComplex<Ring>& c) {
  const Ring& R = c.ring();
  for (const auto& d : c.differentials()) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t k = 0; k < d.cols(); ++k) {
        if (!R.is_zero(d(r, k)) && R.is_unit(d(r, k))) return false;
      }
    }
  }
  return true;
}

/// Ranks of a pruned complex, trailing zeros trimmed.
template <class Ring>
std::vector<std::size_t> betti_ranks(const ChainComplex<Ring>& c) {
  if (!is_unit_free(c)) throw NotMinimal();
  return c.ranks();
}

}  // namespace locus
