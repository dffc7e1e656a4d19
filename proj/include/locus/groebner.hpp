#pragma once

// Groebner machinery over the base polynomial ring: normal forms, Buchberger
// with Gebauer-Moeller pair pruning, syzygies by elimination, modulo, and free
// resolutions by iterated syzygies.
//
// Module elements are vectors of polynomials. Internally a vector is one
// sorted term list whose terms carry a component index; the module order is
// position-over-term with lower component indices dominating.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locus/chain_complex.hpp"
#include "locus/matrix.hpp"
#include "locus/poly.hpp"

namespace locus {

namespace detail {

template <class F>
struct VTerm {
  std::uint32_t comp;
  Monomial mono;
  typename F::value_type coeff;
};

template <class F>
using Vec = std::vector<VTerm<F>>;

template <class F>
int vcompare(const PolyRing<F>& R, std::uint32_t ca, const Monomial& ma, std::uint32_t cb,
             const Monomial& mb) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return R.compare(ma, mb);
}

/// f[from..] + c * m * g[gfrom..]
template <class F>
Vec<F> vec_axpy(const PolyRing<F>& R, const Vec<F>& f, std::size_t from,
                const typename F::value_type& c, const Monomial& m, const Vec<F>& g,
                std::size_t gfrom) {
  const F& k = R.field();
  Vec<F> out;
  out.reserve(f.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : vcompare(R, f[i].comp, f[i].mono, g[j].comp, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({g[j].comp, std::move(gm), k.mul(c, g[j].coeff)});
      ++j;
    } else {
      auto s = k.add(f[i].coeff, k.mul(c, g[j].coeff));
      if (!k.is_zero(s)) out.push_back({f[i].comp, std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
Vec<F> vec_times(const PolyRing<F>& R, const Vec<F>& v, const Monomial& m,
                 const typename F::value_type& c) {
  const F& k = R.field();
  Vec<F> out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.comp, t.mono * m, k.mul(t.coeff, c)});
  return out;
}

template <class F>
Vec<F> to_vec(const std::vector<Polynomial<F>>& entries, std::uint32_t offset = 0) {
  Vec<F> v;
  for (std::uint32_t r = 0; r < entries.size(); ++r) {
    for (const auto& t : entries[r].terms()) v.push_back({r + offset, t.mono, t.coeff});
  }
  return v;
}

template <class F>
std::vector<Polynomial<F>> from_vec(const PolyRing<F>& R, const Vec<F>& v, std::size_t rank,
                                    std::uint32_t offset = 0) {
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp - offset >= rank) throw std::logic_error("component out of range");
    parts[t.comp - offset].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial<F>> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial<F>::from_sorted(R, std::move(p)));
  return out;
}

/// Buchberger engine. In Basis mode it computes a Groebner basis of the
/// submodule generated by the inserted vectors. In Syzygy mode, components
/// below `split` are the module part and the rest record cofactors; vectors
/// whose module part reduces to zero are collected as syzygies, and pairs
/// between such vectors are never formed.
template <class F>
class GroebnerEngine {
 public:
  enum class Mode { Basis, Syzygy };

  GroebnerEngine(const PolyRing<F>& ring, Mode mode,
                 std::uint32_t split = UINT32_MAX)
      : R_(ring), mode_(mode), split_(split) {}

  void insert(Vec<F> v) {
    v = mode_ == Mode::Basis ? normal_form(std::move(v)) : top_reduce(std::move(v));
    if (v.empty()) return;
    if (v.front().comp >= split_) {
      syzygies_.push_back(std::move(v));
      return;
    }
    add_element(make_monic(std::move(v)));
  }

  void complete() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      insert(s_vector(p));
    }
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const Vec<F>& element(std::size_t i) const { return elements_[i].v; }
  const std::vector<Vec<F>>& syzygies() const noexcept { return syzygies_; }

  /// Full reduction of every term by the current elements.
  Vec<F> normal_form(Vec<F> f) const {
    const F& k = R_.field();
    Vec<F> rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const auto& t = f[pos];
      const Element* g = find_reducer(t.comp, t.mono);
      if (g == nullptr) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      Monomial q = t.mono / g->lead;
      auto c = k.neg(t.coeff);
      f = vec_axpy(R_, f, pos + 1, c, q, g->v, 1);
      pos = 0;
    }
    return rem;
  }

  /// Minimal, tail-reduced, monic basis sorted by ascending lead term.
  std::vector<Vec<F>> reduced_basis() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < elements_.size() && !redundant; ++j) {
        if (i == j || elements_[i].comp != elements_[j].comp) continue;
        if (elements_[j].lead.divides(elements_[i].lead) &&
            (!(elements_[j].lead == elements_[i].lead) || j < i)) {
          redundant = true;
        }
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<Vec<F>> out;
    for (std::size_t i : keep) {
      GroebnerEngine others(R_, Mode::Basis, split_);
      for (std::size_t j : keep) {
        if (j != i) others.elements_.push_back(elements_[j]);
      }
      Vec<F> tail(elements_[i].v.begin() + 1, elements_[i].v.end());
      Vec<F> v{elements_[i].v.front()};
      for (auto& t : others.normal_form(std::move(tail))) v.push_back(std::move(t));
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [&](const Vec<F>& a, const Vec<F>& b) {
      return vcompare(R_, a[0].comp, a[0].mono, b[0].comp, b[0].mono) < 0;
    });
    return out;
  }

  /// S-vector of elements i and j (both monic with equal lead components).
  Vec<F> s_vector(std::size_t i, std::size_t j) const {
    Monomial l = Monomial::lcm(elements_[i].lead, elements_[j].lead);
    return s_vector(Pair{i, j, elements_[i].comp, l});
  }

 private:
  struct Element {
    Vec<F> v;
    Monomial lead;
    std::uint32_t comp;
    bool single;  // every term lies in the lead component
  };

  struct Pair {
    std::size_t i, j;
    std::uint32_t comp;
    Monomial lcm;
  };

  struct PairOrder {
    const PolyRing<F>* R;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      int c = vcompare(*R, a.comp, a.lcm, b.comp, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  Vec<F> make_monic(Vec<F> v) const {
    const F& k = R_.field();
    if (!k.is_one(v.front().coeff)) {
      auto inv = k.inv(v.front().coeff);
      for (auto& t : v) t.coeff = k.mul(t.coeff, inv);
    }
    return v;
  }

  const Element* find_reducer(std::uint32_t comp, const Monomial& m) const {
    const Element* best = nullptr;
    for (const auto& e : elements_) {
      if (e.comp == comp && e.lead.divides(m) && (best == nullptr || e.v.size() < best->v.size())) {
        best = &e;
      }
    }
    return best;
  }

  Vec<F> top_reduce(Vec<F> f) const {
    const F& k = R_.field();
    while (!f.empty() && f.front().comp < split_) {
      const Element* g = find_reducer(f.front().comp, f.front().mono);
      if (g == nullptr) break;
      Monomial q = f.front().mono / g->lead;
      auto c = k.neg(f.front().coeff);
      f = vec_axpy(R_, f, 1, c, q, g->v, 1);
    }
    return f;
  }

  Vec<F> s_vector(const Pair& p) const {
    const F& k = R_.field();
    const Element& a = elements_[p.i];
    const Element& b = elements_[p.j];
    Vec<F> sa = vec_times(R_, a.v, p.lcm / a.lead, k.one());
    return vec_axpy(R_, sa, 1, k.neg(k.one()), p.lcm / b.lead, b.v, 1);
  }

  void add_element(Vec<F> v) {
    const std::size_t t = elements_.size();
    Monomial lead = v.front().mono;
    std::uint32_t comp = v.front().comp;
    const bool single = v.back().comp == comp;

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool live = true;
    };
    std::vector<Candidate> cand;
    for (std::size_t i = 0; i < t; ++i) {
      if (elements_[i].comp != comp) continue;
      // The coprime-lead criterion rests on the Koszul relation g*f - f*g,
      // which only exists when both vectors are multiples of one basis vector.
      bool coprime = single && elements_[i].single && elements_[i].lead.coprime(lead);
      cand.push_back({i, Monomial::lcm(elements_[i].lead, lead), coprime});
    }

    // Chain criterion on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->comp == comp && lead.divides(it->lcm)) {
        Monomial li = Monomial::lcm(elements_[it->i].lead, lead);
        Monomial lj = Monomial::lcm(elements_[it->j].lead, lead);
        if (!(li == it->lcm) && !(lj == it->lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    // Criterion M: drop (i,t) when some (j,t) has an lcm properly dividing it.
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.live = false;
          break;
        }
      }
    }
    // Criterion F: one pair per lcm; with the product criterion in Basis mode,
    // a class containing a coprime pair is dropped entirely.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].live) continue;
      bool any_coprime = cand[a].coprime;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (cand[b].live && cand[b].lcm == cand[a].lcm) {
          any_coprime = any_coprime || cand[b].coprime;
          cand[b].live = false;
        }
      }
      if (mode_ == Mode::Basis && any_coprime) cand[a].live = false;
    }

    elements_.push_back({std::move(v), std::move(lead), comp, single});
    for (auto& c : cand) {
      if (c.live) pairs_.insert(Pair{c.i, t, comp, std::move(c.lcm)});
    }
  }

  const PolyRing<F>& R_;
  Mode mode_;
  std::uint32_t split_;
  std::vector<Element> elements_;
  std::set<Pair, PairOrder> pairs_{PairOrder{&R_}};
  std::vector<Vec<F>> syzygies_;
};

}  // namespace detail

/// A reduced Groebner basis of a submodule of R^rank (rank 1 for ideals).
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(std::shared_ptr<const PolyRing<F>> ring, std::size_t rank,
                std::vector<detail::Vec<F>> vecs)
      : ring_(std::move(ring)), rank_(rank), vecs_(std::move(vecs)) {}

  const PolyRing<F>& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const PolyRing<F>>& ring_ptr() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return vecs_.size(); }
  bool is_unit_ideal() const {
    for (const auto& v : vecs_) {
      if (v.front().mono.is_one()) return true;
    }
    return false;
  }

  std::vector<Polynomial<F>> generator(std::size_t i) const {
    return detail::from_vec(*ring_, vecs_.at(i), rank_);
  }
  /// Generators of an ideal basis (rank 1).
  std::vector<Polynomial<F>> polynomials() const {
    std::vector<Polynomial<F>> out;
    for (const auto& v : vecs_) out.push_back(detail::from_vec(*ring_, v, 1)[0]);
    return out;
  }
  const std::vector<detail::Vec<F>>& vecs() const noexcept { return vecs_; }

  detail::GroebnerEngine<F> engine() const {
    detail::GroebnerEngine<F> e(*ring_, detail::GroebnerEngine<F>::Mode::Basis);
    for (const auto& v : vecs_) e.insert(v);
    return e;
  }

 private:
  std::shared_ptr<const PolyRing<F>> ring_;
  std::size_t rank_;
  std::vector<detail::Vec<F>> vecs_;
};

template <class F>
GroebnerBasis<F> buchberger(std::shared_ptr<const PolyRing<F>> ring, std::size_t rank,
                            const std::vector<std::vector<Polynomial<F>>>& gens) {
  detail::GroebnerEngine<F> e(*ring, detail::GroebnerEngine<F>::Mode::Basis);
  for (const auto& g : gens) {
    if (g.size() != rank) throw ShapeMismatch("generator has the wrong number of components");
    for (const auto& p : g) {
      if (!p.is_zero() && p.ring_ptr() != ring.get()) throw RingMismatch();
    }
    e.insert(detail::to_vec(g));
  }
  e.complete();
  return GroebnerBasis<F>(ring, rank, e.reduced_basis());
}

template <class F>
GroebnerBasis<F> ideal_gb(std::shared_ptr<const PolyRing<F>> ring,
                          const std::vector<Polynomial<F>>& gens) {
  std::vector<std::vector<Polynomial<F>>> vs;
  for (const auto& g : gens) vs.push_back({g});
  return buchberger(std::move(ring), 1, vs);
}

/// Groebner basis of the column span of a matrix.
template <class F>
GroebnerBasis<F> column_gb(const Matrix<PolyRing<F>>& m) {
  std::vector<std::vector<Polynomial<F>>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return buchberger(m.ring_ptr(), m.rows(), cols);
}

template <class F>
std::vector<Polynomial<F>> normal_form(const std::vector<Polynomial<F>>& v,
                                       const GroebnerBasis<F>& G) {
  if (v.size() != G.rank()) throw ShapeMismatch("vector has the wrong number of components");
  for (const auto& p : v) {
    if (!p.is_zero() && p.ring_ptr() != G.ring_ptr().get()) throw RingMismatch();
  }
  auto e = G.engine();
  return detail::from_vec(G.ring(), e.normal_form(detail::to_vec(v)), G.rank());
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  return normal_form(std::vector<Polynomial<F>>{f}, G)[0];
}

template <class F>
bool contains(const GroebnerBasis<F>& G, const std::vector<Polynomial<F>>& v) {
  for (const auto& p : normal_form(v, G)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

template <class F>
bool contains(const GroebnerBasis<F>& G, const Polynomial<F>& f) {
  return normal_form(f, G).is_zero();
}

/// Buchberger's criterion checked exhaustively: every S-pair reduces to zero.
template <class F>
bool spairs_reduce_to_zero(const GroebnerBasis<F>& G) {
  auto e = G.engine();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e.element(i).front().comp != e.element(j).front().comp) continue;
      if (!e.normal_form(e.s_vector(i, j)).empty()) return false;
    }
  }
  return true;
}

/// Degree of each column: max over entries of deg(entry) + row weight.
template <class F>
std::vector<long> column_degrees(const Matrix<PolyRing<F>>& m, const std::vector<long>& row_weights) {
  std::vector<long> out(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    bool any = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      long d = e.total_degree() + (r < row_weights.size() ? row_weights[r] : 0);
      out[c] = any ? std::max(out[c], d) : d;
      any = true;
    }
  }
  return out;
}

/// Drops columns lying in the span of columns kept before them, visiting
/// columns by ascending degree. For homogeneous input this leaves a minimal
/// generating set.
template <class F>
Matrix<PolyRing<F>> trim_columns(const Matrix<PolyRing<F>>& m, const std::vector<long>& row_weights) {
  auto deg = column_degrees(m, row_weights);
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  auto terms = [&](std::size_t c) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) n += m(r, c).size();
    return n;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (deg[a] != deg[b]) return deg[a] < deg[b];
    return terms(a) < terms(b);
  });
  detail::GroebnerEngine<F> e(m.ring(), detail::GroebnerEngine<F>::Mode::Basis);
  std::vector<std::size_t> kept;
  for (std::size_t c : order) {
    if (m.column_is_zero(c)) continue;
    auto nf = e.normal_form(detail::to_vec(m.column(c)));
    if (nf.empty()) continue;
    kept.push_back(c);
    e.insert(std::move(nf));
    e.complete();
  }
  std::sort(kept.begin(), kept.end());
  return m.select_columns(kept);
}

enum class Trim { None, Minimize };

/// Generators of ker(M) as the columns of the result.
///
/// Each column j of M is extended by the unit vector e_j in auxiliary
/// components ranked below the components of M, so the syzygies are exactly
/// the basis vectors whose M-part reduces to zero.
template <class F>
Matrix<PolyRing<F>> syz_base(const Matrix<PolyRing<F>>& M, Trim trim = Trim::Minimize,
                             const std::vector<long>& row_weights = {}) {
  const auto& R = M.ring();
  const auto r = static_cast<std::uint32_t>(M.rows());
  const std::size_t n = M.cols();
  detail::GroebnerEngine<F> e(R, detail::GroebnerEngine<F>::Mode::Syzygy, r);
  for (std::size_t j = 0; j < n; ++j) {
    auto v = detail::to_vec(M.column(j));
    v.push_back({r + static_cast<std::uint32_t>(j), Monomial(R.nvars()), R.field().one()});
    e.insert(std::move(v));
  }
  e.complete();
  std::vector<std::vector<Polynomial<F>>> cols;
  for (const auto& s : e.syzygies()) cols.push_back(detail::from_vec(R, s, n, r));
  auto S = Matrix<PolyRing<F>>::from_columns(M.ring_ptr(), n, cols);
  if (trim == Trim::Minimize) {
    S = trim_columns(S, column_degrees(M, row_weights));
  }
  return S;
}

/// Columns generating f^{-1}(Im g).
template <class F>
Matrix<PolyRing<F>> modulo_base(const Matrix<PolyRing<F>>& f, const Matrix<PolyRing<F>>& g) {
  if (f.rows() != g.rows()) throw ShapeMismatch("modulo: f and g have different targets");
  auto S = syz_base(Matrix<PolyRing<F>>::concat_columns(f, g), Trim::None);
  auto top = S.select_rows(0, f.cols());
  const auto& R = f.ring();
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < top.cols(); ++c) {
    if (top.column_is_zero(c)) continue;
    // first nonzero entry monic, so that sign variants count as duplicates
    std::size_t r0 = 0;
    while (top(r0, c).is_zero()) ++r0;
    top.scale_col(c, R.constant(R.field().inv(top(r0, c).lead_coeff())));
    bool duplicate = false;
    for (std::size_t k : keep) {
      bool same = true;
      for (std::size_t r = 0; r < top.rows() && same; ++r) same = top(r, c) == top(r, k);
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) keep.push_back(c);
  }
  return top.select_columns(keep);
}

/// Free resolution with d_1 = pres and d_{i+1} = syz(d_i), stopping at the
/// first zero syzygy module.
template <class F>
ChainComplex<PolyRing<F>> resolve_base(const Matrix<PolyRing<F>>& pres) {
  const std::size_t bound = pres.ring().nvars() + 1;
  if (pres.cols() == 0) return ChainComplex<PolyRing<F>>(pres.ring_ptr(), pres.rows());
  std::vector<Matrix<PolyRing<F>>> diffs{pres};
  std::vector<long> weights(pres.rows(), 0);
  for (;;) {
    auto col_weights = column_degrees(diffs.back(), weights);
    auto S = syz_base(diffs.back(), Trim::Minimize, weights);
    if (S.cols() == 0) break;
    if (diffs.size() + 1 > bound) {
      throw std::logic_error("resolution exceeded the syzygy-theorem length bound");
    }
    diffs.push_back(std::move(S));
    weights = std::move(col_weights);
  }
  return ChainComplex<PolyRing<F>>(pres.ring_ptr(), std::move(diffs));
}

}  // namespace locus
