#pragma once

// Finitely generated modules in subquotient form (Im G + Im H) / Im H, and
// the local-ring operations built on lifting to the base ring: presentation,
// syz, mingens, minimal presentation and minimal free resolution.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locus/chain_complex.hpp"
#include "locus/error.hpp"
#include "locus/groebner.hpp"
#include "locus/localring.hpp"
#include "locus/matrix.hpp"
#include "locus/prune.hpp"

namespace locus {

/// An ideal given by generators (over R or R_P).
template <class Ring>
class Ideal {
 public:
  using element_type = typename Ring::element_type;

  Ideal(std::shared_ptr<const Ring> ring, std::vector<element_type> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
  const std::vector<element_type>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  /// 1 x n matrix of generators.
  Matrix<Ring> matrix() const {
    Matrix<Ring> m(ring_, 1, gens_.size());
    for (std::size_t c = 0; c < gens_.size(); ++c) m.at(0, c) = gens_[c];
    return m;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    a.check(b);
    auto g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(g));
  }
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    a.check(b);
    std::vector<element_type> g;
    for (const auto& x : a.gens_) {
      for (const auto& y : b.gens_) g.push_back(a.ring_->mul(x, y));
    }
    return Ideal(a.ring_, std::move(g));
  }
  Ideal pow(long n) const {
    if (n < 0) throw std::invalid_argument("negative ideal power");
    Ideal r(ring_, {ring_->one()});
    for (long i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const {
    std::string out = "ideal(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i > 0) out += ", ";
      out += ring_->to_string(gens_[i]);
    }
    return out + ")";
  }

 private:
  void check(const Ideal& o) const {
    if (ring_.get() != o.ring_.get()) throw RingMismatch();
  }

  std::shared_ptr<const Ring> ring_;
  std::vector<element_type> gens_;
};

template <class F>
Ideal<LocalRing<F>> promote(const Ideal<PolyRing<F>>& I, const std::shared_ptr<const LocalRing<F>>& RP) {
  if (I.ring_ptr().get() != &RP->base()) throw RingMismatch();
  return Ideal<LocalRing<F>>(RP, promote(I.generators(), *RP));
}

/// (Im G + Im H) / Im H inside a free module of rank r. A missing generator
/// matrix stands for the identity.
template <class Ring>
class SubquotientModule {
 public:
  enum class Kind { Free, Image, Cokernel, Subquotient };

  static SubquotientModule free(std::shared_ptr<const Ring> ring, std::size_t rank) {
    return SubquotientModule(ring, std::nullopt, Matrix<Ring>(ring, rank, 0));
  }
  static SubquotientModule zero(std::shared_ptr<const Ring> ring) {
    return SubquotientModule(ring, Matrix<Ring>(ring, 0, 0), Matrix<Ring>(ring, 0, 0));
  }
  static SubquotientModule image(const Matrix<Ring>& gens) {
    return SubquotientModule(gens.ring_ptr(), gens, Matrix<Ring>(gens.ring_ptr(), gens.rows(), 0));
  }
  static SubquotientModule cokernel(const Matrix<Ring>& rels) {
    return SubquotientModule(rels.ring_ptr(), std::nullopt, rels);
  }
  static SubquotientModule subquotient(const Matrix<Ring>& gens, const Matrix<Ring>& rels) {
    if (gens.rows() != rels.rows()) {
      throw ShapeMismatch("subquotient: generators and relations live in different free modules");
    }
    if (gens.ring_ptr().get() != rels.ring_ptr().get()) throw RingMismatch();
    return SubquotientModule(gens.ring_ptr(), gens, rels);
  }

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
  std::size_t ambient_rank() const noexcept { return rels_.rows(); }
  bool has_generators() const noexcept { return gens_.has_value(); }

  Kind kind() const noexcept {
    if (!gens_) return rels_.cols() == 0 ? Kind::Free : Kind::Cokernel;
    return rels_.cols() == 0 ? Kind::Image : Kind::Subquotient;
  }

  Matrix<Ring> generators() const {
    return gens_ ? *gens_ : Matrix<Ring>::identity(ring_, ambient_rank());
  }
  const Matrix<Ring>& relations() const noexcept { return rels_; }

  /// Transcript-style rendering; `ring_name` names the free module's ring.
  std::string to_string(const std::string& ring_name = "R") const {
    if (ambient_rank() == 0 || (gens_ && gens_->cols() == 0)) return "0";
    switch (kind()) {
      case Kind::Free:
        return ring_name + "^" + std::to_string(ambient_rank());
      case Kind::Cokernel:
        return labelled("cokernel ", rels_);
      case Kind::Image:
        return labelled("image ", *gens_);
      case Kind::Subquotient:
        return labelled("subquotient (", *gens_) + ",\n" + labelled("             ", rels_) + ")";
    }
    return "";
  }

 private:
  SubquotientModule(std::shared_ptr<const Ring> ring, std::optional<Matrix<Ring>> gens,
                    Matrix<Ring> rels)
      : ring_(std::move(ring)), gens_(std::move(gens)), rels_(std::move(rels)) {}

  static std::string labelled(const std::string& label, const Matrix<Ring>& m) {
    std::string body = m.to_string();
    std::string out = label;
    std::string pad(label.size(), ' ');
    for (char ch : body) {
      out += ch;
      if (ch == '\n') out += pad;
    }
    return out;
  }

  std::shared_ptr<const Ring> ring_;
  std::optional<Matrix<Ring>> gens_;
  Matrix<Ring> rels_;
};

template <class F>
using LocalModule = SubquotientModule<LocalRing<F>>;
template <class F>
using BaseModule = SubquotientModule<PolyRing<F>>;

template <class F>
BaseModule<F> lift_up(const LocalModule<F>& M) {
  const auto& R = M.ring().base_ptr();
  auto rels = lift_up(M.relations());
  switch (M.kind()) {
    case LocalModule<F>::Kind::Free: return BaseModule<F>::free(R, M.ambient_rank());
    case LocalModule<F>::Kind::Cokernel: return BaseModule<F>::cokernel(rels);
    case LocalModule<F>::Kind::Image: return BaseModule<F>::image(lift_up(M.generators()));
    case LocalModule<F>::Kind::Subquotient:
      return BaseModule<F>::subquotient(lift_up(M.generators()), rels);
  }
  throw std::logic_error("unreachable");
}

template <class F>
LocalModule<F> promote(const BaseModule<F>& M, const std::shared_ptr<const LocalRing<F>>& RP) {
  auto rels = promote(M.relations(), RP);
  switch (M.kind()) {
    case BaseModule<F>::Kind::Free: return LocalModule<F>::free(RP, M.ambient_rank());
    case BaseModule<F>::Kind::Cokernel: return LocalModule<F>::cokernel(rels);
    case BaseModule<F>::Kind::Image: return LocalModule<F>::image(promote(M.generators(), RP));
    case BaseModule<F>::Kind::Subquotient:
      return LocalModule<F>::subquotient(promote(M.generators(), RP), rels);
  }
  throw std::logic_error("unreachable");
}

// Base ring ----------------------------------------------------------------

/// Matrix f with coker f isomorphic to M, relative to M's generators.
template <class F>
Matrix<PolyRing<F>> presentation(const BaseModule<F>& M) {
  switch (M.kind()) {
    case BaseModule<F>::Kind::Free: return M.relations();
    case BaseModule<F>::Kind::Cokernel: return M.relations();
    case BaseModule<F>::Kind::Image: return syz_base(M.generators());
    case BaseModule<F>::Kind::Subquotient: return modulo_base(M.generators(), M.relations());
  }
  throw std::logic_error("unreachable");
}

template <class F>
ChainComplex<PolyRing<F>> resolution(const BaseModule<F>& M) {
  return resolve_base(presentation(M));
}

// Local ring ---------------------------------------------------------------

/// Minimal generators of the syzygies of the columns of M.
template <class F>
Matrix<LocalRing<F>> syz_local(const Matrix<LocalRing<F>>& M) {
  const auto& RP = M.ring_ptr();
  auto lifted = lift_up_with_scales(M);
  auto g = syz_base(lifted.matrix);
  if (g.cols() == 0) return Matrix<LocalRing<F>>(RP, M.cols(), 0);
  auto h = syz_base(g);
  ChainComplex<LocalRing<F>> c(RP, {promote(g, RP), promote(h, RP)});
  Pruner<LocalRing<F>> pruner(std::move(c));
  pruner.prune_diff(2);
  return local_diagonal(RP, lifted.scales) * pruner.complex().differential(1);
}

/// Relations among the generators of M (columns of M.generators()).
template <class F>
Matrix<LocalRing<F>> presentation(const LocalModule<F>& M) {
  const auto& RP = M.ring_ptr();
  switch (M.kind()) {
    case LocalModule<F>::Kind::Free:
    case LocalModule<F>::Kind::Cokernel:
      return M.relations();
    case LocalModule<F>::Kind::Image:
      return syz_local(M.generators());
    case LocalModule<F>::Kind::Subquotient: {
      auto g = lift_up_with_scales(M.generators());
      auto h = lift_up(M.relations());
      return local_diagonal(RP, g.scales) * promote(modulo_base(g.matrix, h), RP);
    }
  }
  throw std::logic_error("unreachable");
}

/// A minimal generating set of M, chosen among M's own generators.
template <class F>
Matrix<LocalRing<F>> mingens(const LocalModule<F>& M) {
  if (M.kind() == LocalModule<F>::Kind::Free) return M.generators();
  auto G = M.generators();
  if (G.cols() == 0) return G;
  // Which generators survive depends only on the relations modulo P R_P,
  // so the elimination runs on residues and never grows its entries.
  const auto& RP = M.ring();
  auto h = presentation(M);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) h.at(r, c) = RP.residue(h(r, c));
  }
  ChainComplex<LocalRing<F>> c(M.ring_ptr(), {h});
  Pruner<LocalRing<F>> pruner(std::move(c), [&RP](const Fraction<F>& a) { return RP.residue(a); });
  pruner.prune_diff(1);
  return G * pruner.map().basis(0);
}

template <class F>
struct MinimalPresentation {
  LocalModule<F> module;
  /// Columns of the original module's generators that the new basis maps to.
  Matrix<LocalRing<F>> generators;
  PruningMap<LocalRing<F>> map;
};

template <class F>
MinimalPresentation<F> minimal_presentation(const LocalModule<F>& M) {
  const auto& RP = M.ring_ptr();
  auto h = presentation(M);
  std::vector<Matrix<LocalRing<F>>> diffs{h};
  if (h.cols() > 0) {
    auto lifted = lift_up_with_scales(h);
    auto e = syz_base(lifted.matrix);
    if (e.cols() > 0) diffs.push_back(local_diagonal(RP, lifted.scales) * promote(e, RP));
  }
  auto pruned = prune_complex(ChainComplex<LocalRing<F>>(RP, std::move(diffs)));
  const auto& d1 = pruned.complex.differential(1);
  auto module = d1.rows() == 0 ? LocalModule<F>::zero(RP) : LocalModule<F>::cokernel(d1);
  auto gens = M.generators() * pruned.map.basis(0);
  return {std::move(module), std::move(gens), std::move(pruned.map)};
}

template <class F>
PrunedComplex<LocalRing<F>> resolution_local(const LocalModule<F>& M) {
  const auto& RP = M.ring_ptr();
  auto h = presentation(M);
  auto base = resolve_base(lift_up(h));
  return prune_complex(tensor_to_local(base, RP));
}

/// I * M: every generator of M multiplied by every generator of I, with
/// zero and repeated columns dropped.
template <class Ring>
Matrix<Ring> ideal_times(const std::vector<typename Ring::element_type>& ideal,
                         const Matrix<Ring>& gens) {
  const Ring& R = gens.ring();
  std::vector<std::vector<typename Ring::element_type>> cols;
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    auto col = gens.column(c);
    for (const auto& a : ideal) {
      std::vector<typename Ring::element_type> v;
      bool nonzero = false;
      for (const auto& x : col) {
        v.push_back(R.mul(a, x));
        nonzero = nonzero || !R.is_zero(v.back());
      }
      if (!nonzero) continue;
      bool repeated = false;
      for (const auto& w : cols) {
        bool same = true;
        for (std::size_t r = 0; r < v.size() && same; ++r) same = R.equal(v[r], w[r]);
        if (same) {
          repeated = true;
          break;
        }
      }
      if (!repeated) cols.push_back(std::move(v));
    }
  }
  return Matrix<Ring>::from_columns(gens.ring_ptr(), gens.rows(), cols);
}

/// M / I M.
template <class Ring>
SubquotientModule<Ring> quotient(const SubquotientModule<Ring>& M, const Ideal<Ring>& I) {
  if (M.ring_ptr().get() != I.ring_ptr().get()) throw RingMismatch();
  auto extra = ideal_times(I.generators(), M.generators());
  auto rels = Matrix<Ring>::concat_columns(M.relations(), extra);
  if (!M.has_generators()) return SubquotientModule<Ring>::cokernel(rels);
  return SubquotientModule<Ring>::subquotient(M.generators(), rels);
}

/// I M as a submodule of M's ambient quotient.
template <class Ring>
SubquotientModule<Ring> product(const Ideal<Ring>& I, const SubquotientModule<Ring>& M) {
  if (M.ring_ptr().get() != I.ring_ptr().get()) throw RingMismatch();
  auto gens = ideal_times(I.generators(), M.generators());
  if (M.relations().cols() == 0) return SubquotientModule<Ring>::image(gens);
  return SubquotientModule<Ring>::subquotient(gens, M.relations());
}

}  // namespace locus
