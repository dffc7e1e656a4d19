#pragma once

// Length and the Hilbert-Samuel function of modules over R_P.

#include <cstddef>
#include <memory>
#include <vector>

#include "locus/error.hpp"
#include "locus/groebner.hpp"
#include "locus/localring.hpp"
#include "locus/modules.hpp"

namespace locus {

inline constexpr std::size_t kDefaultLengthCap = 100;

/// An ideal of R_P generated by non-units.
template <class F>
class ParameterIdeal {
 public:
  ParameterIdeal(std::shared_ptr<const LocalRing<F>> ring, std::vector<Fraction<F>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (ring_->is_unit(g)) {
        throw Error("parameter ideal generator " + ring_->to_string(g) + " is a unit");
      }
    }
  }
  explicit ParameterIdeal(const Ideal<LocalRing<F>>& I)
      : ParameterIdeal(I.ring_ptr(), I.generators()) {}

  /// The maximal ideal P R_P.
  static ParameterIdeal maximal(std::shared_ptr<const LocalRing<F>> ring) {
    auto gens = promote(ring->prime(), *ring);
    return ParameterIdeal(std::move(ring), std::move(gens));
  }

  const LocalRing<F>& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const LocalRing<F>>& ring_ptr() const noexcept { return ring_; }
  const std::vector<Fraction<F>>& generators() const noexcept { return gens_; }

  /// Equality with P R_P, by mutual membership of the numerators and the
  /// generators of P over the base ring.
  bool is_maximal() const {
    std::vector<Polynomial<F>> nums;
    for (const auto& g : gens_) nums.push_back(g.num);
    for (const auto& n : nums) {
      if (!contains(ring_->prime_gb(), n)) return false;
    }
    auto G = ideal_gb(ring_->base_ptr(), nums);
    for (const auto& p : ring_->prime()) {
      if (!contains(G, p)) return false;
    }
    return true;
  }

 private:
  std::shared_ptr<const LocalRing<F>> ring_;
  std::vector<Fraction<F>> gens_;
};

namespace detail {

/// Generators of q*N for N = (Im G + Im H)/Im H, before minimization.
template <class F>
LocalModule<F> times(const std::vector<Fraction<F>>& q, const Matrix<LocalRing<F>>& G,
                     const Matrix<LocalRing<F>>& H) {
  auto gens = ideal_times(q, G);
  if (H.cols() == 0) return LocalModule<F>::image(gens);
  return LocalModule<F>::subquotient(gens, H);
}

}  // namespace detail

/// Length of M as the sum of the minimal generator counts of m^i M.
template <class F>
std::size_t length_of(const LocalModule<F>& M, std::size_t cap = kDefaultLengthCap) {
  const auto& RP = M.ring_ptr();
  auto m = promote(RP->prime(), *RP);
  const auto H = M.relations();
  LocalModule<F> N = M;
  std::size_t total = 0;
  for (std::size_t step = 0;; ++step) {
    if (step >= cap) throw InfiniteLength(cap);
    auto G = mingens(N);
    if (G.cols() == 0) return total;
    total += G.cols();
    N = detail::times(m, G, H);
  }
}

/// H_{q,M}(n) for n = 0..n_max.
template <class F>
std::vector<std::size_t> hilbert_samuel_values(const ParameterIdeal<F>& q, const LocalModule<F>& M,
                                               std::size_t n_max,
                                               std::size_t cap = kDefaultLengthCap) {
  if (q.ring_ptr().get() != M.ring_ptr().get()) throw RingMismatch();
  const bool maximal = q.is_maximal();
  const auto H = M.relations();
  std::vector<std::size_t> out;
  auto G = mingens(M);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) G = mingens(detail::times(q.generators(), G, H));
    if (maximal) {
      out.push_back(G.cols());
      continue;
    }
    if (G.cols() == 0) {
      out.push_back(0);
      continue;
    }
    auto rels = Matrix<LocalRing<F>>::concat_columns(H, ideal_times(q.generators(), G));
    out.push_back(length_of(LocalModule<F>::subquotient(G, rels), cap));
  }
  return out;
}

/// H_{q,M}(n) = length(q^n M / q^{n+1} M).
template <class F>
std::size_t hilbert_samuel_function(const ParameterIdeal<F>& q, const LocalModule<F>& M,
                                    std::size_t n, std::size_t cap = kDefaultLengthCap) {
  return hilbert_samuel_values(q, M, n, cap).back();
}

/// Length of R_P / I R_P.
template <class F>
std::size_t multiplicity_at(const Ideal<PolyRing<F>>& I, const std::vector<Polynomial<F>>& prime,
                            std::size_t cap = kDefaultLengthCap) {
  auto RP = make_local_ring(I.ring_ptr(), prime);
  return length_of(LocalModule<F>::cokernel(promote(I.matrix(), RP)), cap);
}

}  // namespace locus
