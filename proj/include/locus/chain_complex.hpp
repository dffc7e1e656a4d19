#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "locus/error.hpp"
#include "locus/matrix.hpp"

namespace locus {

/// F_0 <- F_1 <- ... <- F_k given by differentials d_1..d_k, where d_i is a
/// rank(F_{i-1}) x rank(F_i) matrix.
template <class Ring>
class ChainComplex {
 public:
  using matrix_type = Matrix<Ring>;

  ChainComplex() = default;
  /// Length-0 complex: the free module F_0 of the given rank.
  ChainComplex(std::shared_ptr<const Ring> ring, std::size_t rank0)
      : ring_(std::move(ring)), rank0_(rank0) {}
  ChainComplex(std::shared_ptr<const Ring> ring, std::vector<matrix_type> diffs)
      : ring_(std::move(ring)), diffs_(std::move(diffs)) {
    if (!diffs_.empty()) rank0_ = diffs_[0].rows();
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (diffs_[i].ring_ptr().get() != ring_.get()) throw RingMismatch();
      if (i > 0 && diffs_[i].rows() != diffs_[i - 1].cols()) {
        throw ShapeMismatch("differentials " + std::to_string(i) + " and " +
                            std::to_string(i + 1) + " are not composable");
      }
    }
  }

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }

  std::size_t length() const noexcept { return diffs_.size(); }

  /// d_i for 1 <= i <= length().
  const matrix_type& differential(std::size_t i) const { return diffs_.at(check(i) - 1); }
  matrix_type& differential(std::size_t i) { return diffs_.at(check(i) - 1); }
  const std::vector<matrix_type>& differentials() const noexcept { return diffs_; }

  std::size_t rank(std::size_t i) const {
    if (i == 0) return diffs_.empty() ? rank0_ : diffs_[0].rows();
    if (i <= diffs_.size()) return diffs_[i - 1].cols();
    return 0;
  }

  /// Ranks of F_0..F_k with trailing zeros removed.
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= diffs_.size(); ++i) out.push_back(rank(i));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  /// d_i * d_{i+1} == 0 for every i.
  bool is_complex() const {
    for (std::size_t i = 1; i < diffs_.size(); ++i) {
      if (!(diffs_[i - 1] * diffs_[i]).is_zero()) return false;
    }
    return true;
  }

  std::string to_string() const {
    auto r = ranks();
    if (r.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out += " <-- ";
      out += std::to_string(r[i]);
    }
    return out;
  }

 private:
  std::size_t check(std::size_t i) const {
    if (i == 0 || i > diffs_.size()) {
      throw IndexOutOfRange("differential index " + std::to_string(i) + " out of range");
    }
    return i;
  }

  std::shared_ptr<const Ring> ring_;
  std::vector<matrix_type> diffs_;
  std::size_t rank0_ = 0;
};

}  // namespace locus
