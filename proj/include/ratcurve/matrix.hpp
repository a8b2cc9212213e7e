#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ratcurve/error.hpp"
#include "ratcurve/field.hpp"

namespace ratcurve {

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols,
                          const std::vector<std::vector<Element>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorCode::Usage, "row length does not match column count");
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Element> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Element> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  std::vector<Element> column(std::size_t c) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
    }
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (!a.field_.equal(a.entries_[i], b.entries_[i])) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::Usage, "matrix shape mismatch");
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        // out.row(i) += aik * b.row(k)
        f.submul(out.row(i), b.row(k), f.neg(aik));
      }
    }
    return out;
  }

  std::vector<Element> apply(std::span<const Element> x) const {
    if (x.size() != cols_) throw Error(ErrorCode::Usage, "vector length mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      Element acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j) {
        acc = field_.add(acc, field_.mul((*this)(i, j), x[j]));
      }
      out[i] = acc;
    }
    return out;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination with first-nonzero
/// pivoting.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && f.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(pivot_row, r);
    auto prow = m.row(pivot_row).subspan(c);
    if (!f.is_one(prow[0])) f.scale(prow, f.inv(prow[0]));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      f.submul(m.row(i).subspan(c), prow, factor);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Columns form a basis of the right null space. One column per free
/// variable, ordered by free-variable index.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix<F> k(f, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    k(fc, j) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = f.neg(r(i, fc));
  }
  return k;
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Element>> solve(
    const Matrix<F>& m, std::span<const typename F::Element> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::Usage, "solve: right-hand side length mismatch");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Element> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

template <class F>
typename F::Element determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Usage, "determinant of non-square matrix");
  const F& f = m.field();
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && f.is_zero(m(r, c))) ++r;
    if (r == n) return f.zero();
    if (r != c) {
      m.swap_rows(r, c);
      det = f.neg(det);
    }
    const auto pivot = m(c, c);
    det = f.mul(det, pivot);
    const auto pinv = f.inv(pivot);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), pinv);
      f.submul(m.row(i).subspan(c), m.row(c).subspan(c), factor);
    }
  }
  return det;
}

/// Incrementally grown row echelon basis. Each stored row has its first
/// nonzero entry equal to one at a column no other row starts at, so
/// reduction of a candidate is a single left-to-right sweep.
template <class F>
class EchelonBuilder {
 public:
  using Element = typename F::Element;

  EchelonBuilder(const F& field, std::size_t cols)
      : field_(field), cols_(cols), row_at_pivot_(cols, kNone) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  const std::vector<std::vector<Element>>& rows() const { return rows_; }

  /// Reduces v against the basis in place; true if v reduces to zero.
  bool reduce(std::vector<Element>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::Usage, "echelon: vector length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      const std::size_t r = row_at_pivot_[c];
      if (r == kNone) continue;
      const auto factor = v[c];
      field_.submul(std::span<Element>(v).subspan(c),
                    std::span<const Element>(rows_[r]).subspan(c), factor);
    }
    for (const auto& e : v) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  bool contains(std::vector<Element> v) const { return reduce(v); }

  /// Adds v to the span; returns true iff the rank increased.
  bool insert(std::vector<Element> v) {
    if (full()) return false;
    if (reduce(v)) return false;
    std::size_t c = 0;
    while (field_.is_zero(v[c])) ++c;
    if (!field_.is_one(v[c])) {
      field_.scale(std::span<Element>(v).subspan(c), field_.inv(v[c]));
    }
    row_at_pivot_[c] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  F field_;
  std::size_t cols_;
  std::vector<std::size_t> row_at_pivot_;
  std::vector<std::vector<Element>> rows_;
};

}  // namespace ratcurve
