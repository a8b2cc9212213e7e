#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/matrix.hpp"
#include "ratcurve/parameterization.hpp"

namespace ratcurve {

/// n x (n-1) homogeneous syzygy matrix. Column j has entries that are zero or
/// of degree col_degrees()[j].
template <class F>
class SyzygyMatrix {
 public:
  using Column = std::vector<BinaryForm<F>>;

  SyzygyMatrix(std::vector<Column> columns, std::vector<int> col_degrees)
      : columns_(std::move(columns)), degrees_(std::move(col_degrees)) {
    if (columns_.size() != degrees_.size()) {
      throw Error(ErrorCode::Usage, "one degree per column required");
    }
    if (!columns_.empty()) {
      const auto n = columns_.front().size();
      for (const auto& c : columns_) {
        if (c.size() != n) throw Error(ErrorCode::Usage, "ragged syzygy matrix");
      }
    }
  }

  std::size_t rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
  std::size_t cols() const { return columns_.size(); }
  const BinaryForm<F>& entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  const Column& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<int>& col_degrees() const { return degrees_; }

  int degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

  /// Nonzero entries, row-major.
  std::vector<BinaryForm<F>> nonzero_entries() const {
    std::vector<BinaryForm<F>> out;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!entry(i, j).is_zero()) out.push_back(entry(i, j));
      }
    }
    return out;
  }

  SyzygyMatrix with_entry(std::size_t i, std::size_t j, BinaryForm<F> h) const {
    auto cols = columns_;
    cols[j][i] = std::move(h);
    return SyzygyMatrix(std::move(cols), degrees_);
  }

  SyzygyMatrix with_columns_permuted(const std::vector<std::size_t>& order) const {
    std::vector<Column> cols;
    std::vector<int> degs;
    for (auto j : order) {
      cols.push_back(columns_.at(j));
      degs.push_back(degrees_.at(j));
    }
    return SyzygyMatrix(std::move(cols), std::move(degs));
  }

 private:
  std::vector<Column> columns_;
  std::vector<int> degrees_;
};

namespace detail {

// Coefficient matrix of (h_1..h_n) -> sum h_i g_i restricted to deg h_i = t.
// Unknown h_i occupies columns i*(t+1) .. i*(t+1)+t.
template <class F>
Matrix<F> multiplication_matrix(const Parameterization<F>& p, int t) {
  const F& f = p.field();
  const std::size_t w = static_cast<std::size_t>(t) + 1;
  const std::size_t d = static_cast<std::size_t>(p.degree());
  Matrix<F> m(f, w + d, p.size() * w);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& g = p[i].coeffs();
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = 0; b <= d; ++b) m(a + b, i * w + a) = g[b];
    }
  }
  return m;
}

// Flattened coefficients of x^(t-D-s) y^s * col, for a column of degree D,
// viewed in degree t.
template <class F>
std::vector<typename F::Element> flatten_shifted(const F& f, const std::vector<BinaryForm<F>>& col,
                                                 int t, int s) {
  const std::size_t w = static_cast<std::size_t>(t) + 1;
  std::vector<typename F::Element> v(col.size() * w, f.zero());
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    const auto& c = col[i].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) v[i * w + static_cast<std::size_t>(s) + k] = c[k];
  }
  return v;
}

template <class F>
std::vector<BinaryForm<F>> unflatten(const F& f, std::span<const typename F::Element> v,
                                     std::size_t n, int t) {
  const std::size_t w = static_cast<std::size_t>(t) + 1;
  std::vector<BinaryForm<F>> col;
  for (std::size_t i = 0; i < n; ++i) {
    col.push_back(BinaryForm<F>::from_coeffs(
        f, std::vector<typename F::Element>(v.begin() + i * w, v.begin() + (i + 1) * w)));
  }
  return col;
}

}  // namespace detail

/// Basis of the degree-t syzygies of the generators: kernel of the
/// (t+d+1) x n(t+1) coefficient matrix of the multiplication map.
template <class F>
std::vector<std::vector<BinaryForm<F>>> syzygies_in_degree(const Parameterization<F>& p, int t) {
  if (t < 0) throw Error(ErrorCode::Usage, "syzygy degree must be nonnegative");
  const F& f = p.field();
  const auto k = kernel_basis(detail::multiplication_matrix(p, t));
  std::vector<std::vector<BinaryForm<F>>> out;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const auto v = k.column(j);
    out.push_back(detail::unflatten(f, std::span<const typename F::Element>(v), p.size(), t));
  }
  return out;
}

/// Minimal homogeneous Hilbert-Burch matrix. Degrees t = 1..d are scanned; a
/// degree-t syzygy is admitted when it is not in the span of the monomial
/// multiples of the columns admitted so far. Columns come out with ascending
/// degree and the first nonzero entry of each column monic.
template <class F>
SyzygyMatrix<F> hilbert_burch(const Parameterization<F>& p) {
  const F& f = p.field();
  const std::size_t n = p.size();
  const int d = p.degree();
  std::vector<std::vector<BinaryForm<F>>> cols;
  std::vector<int> degs;
  int sum = 0;
  for (int t = 1; t <= d && cols.size() + 1 < n; ++t) {
    EchelonBuilder<F> module_slice(f, n * (static_cast<std::size_t>(t) + 1));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int s = 0; s <= t - degs[j]; ++s) {
        module_slice.insert(detail::flatten_shifted(f, cols[j], t, s));
      }
    }
    for (auto& cand : syzygies_in_degree(p, t)) {
      if (cols.size() + 1 == n) break;
      if (!module_slice.insert(detail::flatten_shifted(f, cand, t, 0))) continue;
      // Normalise: first nonzero entry monic.
      for (const auto& e : cand) {
        if (e.is_zero()) continue;
        const auto inv = f.inv(e.leading());
        for (auto& x : cand) x = x.scaled(inv);
        break;
      }
      cols.push_back(std::move(cand));
      degs.push_back(t);
      sum += t;
    }
  }
  if (cols.size() + 1 != n || sum != d) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "syzygy search ended with " + std::to_string(cols.size()) + " columns of degree sum " +
                    std::to_string(sum) + " (expected " + std::to_string(n - 1) + " columns summing to " +
                    std::to_string(d) + ")");
  }
  return SyzygyMatrix<F>(std::move(cols), std::move(degs));
}

/// g * phi = 0, column degrees sum to d, and a single unit u with
/// g_i = u (-1)^i det(phi without row i) for every i.
template <class F>
bool verify_hilbert_burch(const Parameterization<F>& p, const SyzygyMatrix<F>& phi) {
  const F& f = p.field();
  const std::size_t n = p.size();
  const int d = p.degree();
  if (phi.rows() != n || phi.cols() + 1 != n) return false;
  if (phi.degree_sum() != d) return false;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = phi.entry(i, j);
      if (e.is_zero()) continue;
      if (e.degree() != phi.col_degrees()[j]) return false;
      nonzero = true;
    }
    if (!nonzero) return false;
  }
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    auto acc = BinaryForm<F>::zero(f);
    for (std::size_t i = 0; i < n; ++i) acc = acc + p[i] * phi.entry(i, j);
    if (!acc.is_zero()) return false;
  }
  // Both sides are forms of degree d, so agreement at the d+1 points [tau:1],
  // tau = 0..d, is agreement as forms.
  std::optional<typename F::Element> unit;
  for (int tau = 0; tau <= d; ++tau) {
    const auto x = f.from_int(tau);
    const auto y = f.one();
    Matrix<F> vals(f, n, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) vals(i, j) = phi.entry(i, j).eval(x, y);
    }
    for (std::size_t del = 0; del < n; ++del) {
      Matrix<F> minor(f, n - 1, n - 1);
      for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == del) continue;
        for (std::size_t j = 0; j + 1 < n; ++j) minor(r, j) = vals(i, j);
        ++r;
      }
      auto signed_minor = determinant(std::move(minor));
      if (del % 2 == 1) signed_minor = f.neg(signed_minor);
      const auto g = p[del].eval(x, y);
      if (!unit) {
        if (f.is_zero(signed_minor)) {
          if (!f.is_zero(g)) return false;
          continue;
        }
        unit = f.mul(g, f.inv(signed_minor));
        if (f.is_zero(*unit)) return false;
      } else if (!f.equal(g, f.mul(*unit, signed_minor))) {
        return false;
      }
    }
  }
  return unit.has_value();
}

}  // namespace ratcurve
