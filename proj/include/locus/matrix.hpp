#pragma once

// Dense matrices over a base polynomial ring or a local ring. Columns are
// module elements; a matrix with r rows and c columns is a map R^c -> R^r.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "locus/error.hpp"

namespace locus {

template <class Ring>
class Matrix {
 public:
  using ring_type = Ring;
  using element_type = typename Ring::element_type;

  Matrix() = default;
  Matrix(std::shared_ptr<const Ring> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_->zero()) {}
  Matrix(std::shared_ptr<const Ring> ring, std::size_t rows, std::size_t cols,
         std::vector<element_type> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
  }

  static Matrix identity(std::shared_ptr<const Ring> ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
  }

  static Matrix from_rows(std::shared_ptr<const Ring> ring,
                          const std::vector<std::vector<element_type>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(ring, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != nc) throw ShapeMismatch("ragged rows");
      for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(std::shared_ptr<const Ring> ring, std::size_t nrows,
                             const std::vector<std::vector<element_type>>& cols) {
    Matrix m(ring, nrows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != nrows) throw ShapeMismatch("column length does not match rows");
      for (std::size_t r = 0; r < nrows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
  }

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const element_type& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  element_type& at(std::size_t r, std::size_t c) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return entries_[r * cols_ + c];
  }
  const element_type& at(std::size_t r, std::size_t c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return entries_[r * cols_ + c];
  }

  std::vector<element_type> column(std::size_t c) const {
    check_index(c, cols_, "column");
    std::vector<element_type> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  std::vector<element_type> row(std::size_t r) const {
    check_index(r, rows_, "row");
    return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!ring_->is_zero(e)) return false;
    }
    return true;
  }
  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!ring_->is_zero((*this)(r, c))) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_ring(b);
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product: inner dimensions differ");
    const Ring& R = *a.ring_;
    Matrix p(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (R.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (R.is_zero(bkj)) continue;
          p.entries_[i * p.cols_ + j] = R.add(p(i, j), R.mul(aik, bkj));
        }
      }
    }
    return p;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_ring(b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum: shapes differ");
    Matrix s(a);
    for (std::size_t i = 0; i < s.entries_.size(); ++i) {
      s.entries_[i] = a.ring_->add(a.entries_[i], b.entries_[i]);
    }
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (!a.ring_->equal(a.entries_[i], b.entries_[i])) return false;
    }
    return true;
  }

  Matrix scaled(const element_type& s) const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = ring_->mul(s, e);
    return m;
  }

  /// Columns listed in `which`, in that order.
  Matrix select_columns(const std::vector<std::size_t>& which) const {
    Matrix m(ring_, rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j) {
      check_index(which[j], cols_, "column");
      for (std::size_t r = 0; r < rows_; ++r) m.entries_[r * m.cols_ + j] = (*this)(r, which[j]);
    }
    return m;
  }
  Matrix select_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw IndexOutOfRange("row range out of range");
    Matrix m(ring_, count, cols_);
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.entries_[r * cols_ + c] = (*this)(first + r, c);
    }
    return m;
  }

  /// [a | b]
  static Matrix concat_columns(const Matrix& a, const Matrix& b) {
    a.check_ring(b);
    if (a.rows_ != b.rows_) throw ShapeMismatch("concatenation: row counts differ");
    Matrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) m.entries_[r * m.cols_ + c] = a(r, c);
      for (std::size_t c = 0; c < b.cols_; ++c) m.entries_[r * m.cols_ + a.cols_ + c] = b(r, c);
    }
    return m;
  }

  // In-place elementary operations.

  void swap_rows(std::size_t a, std::size_t b) {
    check_index(a, rows_, "row");
    check_index(b, rows_, "row");
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    check_index(a, cols_, "column");
    check_index(b, cols_, "column");
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(entries_[r * cols_ + a], entries_[r * cols_ + b]);
  }
  /// row[target] += s * row[source]
  void add_multiple_of_row(std::size_t target, std::size_t source, const element_type& s) {
    check_index(target, rows_, "row");
    check_index(source, rows_, "row");
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& src = (*this)(source, c);
      if (ring_->is_zero(src)) continue;
      auto& dst = entries_[target * cols_ + c];
      dst = ring_->add(dst, ring_->mul(s, src));
    }
  }
  /// col[target] += s * col[source]
  void add_multiple_of_col(std::size_t target, std::size_t source, const element_type& s) {
    check_index(target, cols_, "column");
    check_index(source, cols_, "column");
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& src = (*this)(r, source);
      if (ring_->is_zero(src)) continue;
      auto& dst = entries_[r * cols_ + target];
      dst = ring_->add(dst, ring_->mul(s, src));
    }
  }
  void scale_row(std::size_t r, const element_type& s) {
    check_index(r, rows_, "row");
    for (std::size_t c = 0; c < cols_; ++c) entries_[r * cols_ + c] = ring_->mul(s, (*this)(r, c));
  }
  void scale_col(std::size_t c, const element_type& s) {
    check_index(c, cols_, "column");
    for (std::size_t r = 0; r < rows_; ++r) entries_[r * cols_ + c] = ring_->mul(s, (*this)(r, c));
  }
  void delete_row(std::size_t r) {
    check_index(r, rows_, "row");
    entries_.erase(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
    --rows_;
  }
  void delete_col(std::size_t c) {
    check_index(c, cols_, "column");
    std::vector<element_type> kept;
    kept.reserve(rows_ * (cols_ - 1));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != c) kept.push_back(std::move(entries_[r * cols_ + j]));
      }
    }
    entries_ = std::move(kept);
    --cols_;
  }

  /// Transcript-style rendering: one `| a b |` line per row, columns padded.
  std::string to_string() const {
    if (rows_ == 0 || cols_ == 0) return "0";
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        cells[r * cols_ + c] = ring_->to_string((*this)(r, c));
        width[c] = std::max(width[c], cells[r * cols_ + c].size());
      }
    }
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r > 0) out += '\n';
      out += '|';
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto& s = cells[r * cols_ + c];
        out += ' ';
        out += s;
        out.append(width[c] - s.size(), ' ');
      }
      out += " |";
    }
    return out;
  }

 private:
  static void check_index(std::size_t i, std::size_t bound, const char* what) {
    if (i >= bound) throw IndexOutOfRange(std::string(what) + " index out of range");
  }
  void check_ring(const Matrix& other) const {
    if (ring_.get() != other.ring_.get()) throw RingMismatch();
  }

  std::shared_ptr<const Ring> ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<element_type> entries_;
};

}  // namespace locus
