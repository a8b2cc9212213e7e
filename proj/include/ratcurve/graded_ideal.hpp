#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/matrix.hpp"

namespace ratcurve {

/// Homogeneous ideal of k[x,y] given by generators (monic, nonzero, possibly
/// of different degrees). Every computation below is linear algebra on the
/// graded pieces J_n; two variables need no Groebner machinery.
template <class F>
class GradedIdeal {
 public:
  GradedIdeal(const F& field, std::vector<BinaryForm<F>> gens) : field_(field) {
    for (auto& g : gens) {
      if (!g.is_zero()) gens_.push_back(g.monic());
    }
    if (gens_.empty()) throw Error(ErrorCode::ZeroIdeal, "an ideal needs a nonzero generator");
  }

  static GradedIdeal unit(const F& field) {
    return GradedIdeal(field, {BinaryForm<F>::constant(field, field.one())});
  }

  const F& field() const { return field_; }
  const std::vector<BinaryForm<F>>& gens() const { return gens_; }

  int max_gen_degree() const {
    int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.degree());
    return m;
  }
  int min_gen_degree() const {
    int m = gens_.front().degree();
    for (const auto& g : gens_) m = std::min(m, g.degree());
    return m;
  }

  bool all_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_monomial(); });
  }

 private:
  F field_;
  std::vector<BinaryForm<F>> gens_;
};

/// (x,y)^t as the t+1 monomials of degree t; t = 0 gives the unit ideal.
template <class F>
GradedIdeal<F> maximal_ideal_power(const F& field, int t) {
  std::vector<BinaryForm<F>> gens;
  for (int b = 0; b <= t; ++b) gens.push_back(BinaryForm<F>::monomial(field, t - b, b));
  return GradedIdeal<F>(field, std::move(gens));
}

namespace detail {

// Echelon basis of J_n built from the monomial multiples m*g.
template <class F>
EchelonBuilder<F> slice_echelon(const GradedIdeal<F>& j, int n) {
  const F& f = j.field();
  EchelonBuilder<F> eb(f, static_cast<std::size_t>(n) + 1);
  for (const auto& g : j.gens()) {
    const int dg = g.degree();
    if (dg > n) continue;
    const int shift = n - dg;
    // x^(shift-b) y^b * g occupies coefficient slots b .. b+dg.
    for (int b = 0; b <= shift && !eb.full(); ++b) {
      std::vector<typename F::Element> v(static_cast<std::size_t>(n) + 1, f.zero());
      for (std::size_t i = 0; i < g.coeffs().size(); ++i) v[static_cast<std::size_t>(b) + i] = g.coeffs()[i];
      eb.insert(std::move(v));
    }
  }
  return eb;
}

}  // namespace detail

/// Basis of the vector space J_n (rows of the echelon form, as forms).
template <class F>
std::vector<BinaryForm<F>> slice_basis(const GradedIdeal<F>& j, int n) {
  if (n < 0) throw Error(ErrorCode::Usage, "slice degree must be nonnegative");
  const auto eb = detail::slice_echelon(j, n);
  std::vector<BinaryForm<F>> out;
  for (const auto& row : eb.rows()) out.push_back(BinaryForm<F>::from_coeffs(j.field(), row));
  return out;
}

template <class F>
std::size_t slice_dim(const GradedIdeal<F>& j, int n) {
  if (n < 0) throw Error(ErrorCode::Usage, "slice degree must be nonnegative");
  return detail::slice_echelon(j, n).rank();
}

/// HF_{R/J}(n) = (n+1) - dim J_n.
template <class F>
std::size_t hf_quotient(const GradedIdeal<F>& j, int n) {
  return static_cast<std::size_t>(n) + 1 - slice_dim(j, n);
}

/// Membership of a homogeneous form in J.
template <class F>
bool contains(const GradedIdeal<F>& j, const BinaryForm<F>& h) {
  if (h.is_zero()) return true;
  const auto eb = detail::slice_echelon(j, h.degree());
  return eb.contains(h.coeffs());
}

/// Length of R/J for m-primary J: the Hilbert function summed until it
/// first vanishes.
template <class F>
std::size_t length_quotient(const GradedIdeal<F>& j) {
  if (!gcd_forms(j.gens()).is_constant()) {
    throw Error(ErrorCode::NotMPrimary, "generators share a common factor");
  }
  std::size_t total = 0;
  for (int n = 0;; ++n) {
    const std::size_t h = hf_quotient(j, n);
    if (h == 0) return total;
    total += h;
  }
}

/// Number of minimal homogeneous generators: sum over n of
/// dim J_n - dim (R_1 J_{n-1}).
template <class F>
std::size_t min_gens(const GradedIdeal<F>& j) {
  const F& f = j.field();
  std::size_t count = 0;
  const int top = j.max_gen_degree();
  for (int n = j.min_gen_degree(); n <= top; ++n) {
    const std::size_t full = slice_dim(j, n);
    if (n == 0) {
      count += full;
      continue;
    }
    EchelonBuilder<F> lower(f, static_cast<std::size_t>(n) + 1);
    const auto below = detail::slice_echelon(j, n - 1);
    for (const auto& b : below.rows()) {
      // x*b and y*b: shifts by zero and one slot.
      for (std::size_t s = 0; s <= 1; ++s) {
        std::vector<typename F::Element> v(static_cast<std::size_t>(n) + 1, f.zero());
        for (std::size_t i = 0; i < b.size(); ++i) v[i + s] = b[i];
        lower.insert(std::move(v));
      }
    }
    count += full - lower.rank();
  }
  return count;
}

/// J^t generated by all t-fold products of generators (multisets), with
/// exact duplicates removed.
template <class F>
GradedIdeal<F> power(const GradedIdeal<F>& j, int t) {
  if (t < 1) throw Error(ErrorCode::Usage, "ideal power exponent must be positive");
  const auto& g = j.gens();
  std::vector<BinaryForm<F>> current{BinaryForm<F>::constant(j.field(), j.field().one())};
  std::vector<std::size_t> start{0};  // smallest generator index allowed next
  for (int step = 0; step < t; ++step) {
    std::vector<BinaryForm<F>> next;
    std::vector<std::size_t> next_start;
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (std::size_t i = start[k]; i < g.size(); ++i) {
        next.push_back(current[k] * g[i]);
        next_start.push_back(i);
      }
    }
    current = std::move(next);
    start = std::move(next_start);
  }
  std::vector<BinaryForm<F>> unique;
  for (auto& h : current) {
    auto m = h.monic();
    if (std::none_of(unique.begin(), unique.end(), [&](const auto& u) { return u == m; })) {
      unique.push_back(std::move(m));
    }
  }
  return GradedIdeal<F>(j.field(), std::move(unique));
}

/// Product ideal generated by pairwise products.
template <class F>
GradedIdeal<F> product(const GradedIdeal<F>& a, const GradedIdeal<F>& b) {
  std::vector<BinaryForm<F>> gens;
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(g * h);
  }
  return GradedIdeal<F>(a.field(), std::move(gens));
}

/// Equality of ideals. Both ideals are generated in degrees <= N, so slice
/// agreement for n <= N (checked one degree past, as a stabilisation probe)
/// gives containment both ways.
template <class F>
bool ideal_equals(const GradedIdeal<F>& a, const GradedIdeal<F>& b) {
  const int top = std::max(a.max_gen_degree(), b.max_gen_degree()) + 1;
  for (int n = 0; n <= top; ++n) {
    const auto ea = detail::slice_echelon(a, n);
    const auto eb = detail::slice_echelon(b, n);
    if (ea.rank() != eb.rank()) return false;
    for (const auto& row : ea.rows()) {
      if (!eb.contains(row)) return false;
    }
  }
  return true;
}

/// Monomial generators of J when every slice up to the top generator degree
/// is spanned by monomials; nullopt otherwise.
template <class F>
std::optional<GradedIdeal<F>> as_monomial_ideal(const GradedIdeal<F>& j) {
  if (j.all_monomial()) return j;
  const F& f = j.field();
  std::vector<BinaryForm<F>> gens;
  for (int n = j.min_gen_degree(); n <= j.max_gen_degree(); ++n) {
    const auto eb = detail::slice_echelon(j, n);
    // A subspace is spanned by monomials iff its reduced echelon basis is,
    // so reduce fully before testing.
    Matrix<F> m(f, eb.rank(), static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < eb.rank(); ++r) {
      for (std::size_t c = 0; c <= static_cast<std::size_t>(n); ++c) m(r, c) = eb.rows()[r][c];
    }
    const auto red = rref(std::move(m));
    for (std::size_t r = 0; r < red.rank(); ++r) {
      auto h = BinaryForm<F>::from_coeffs(f, std::vector<typename F::Element>(
                                                 red.reduced.row(r).begin(), red.reduced.row(r).end()));
      if (!h.is_monomial()) return std::nullopt;
      gens.push_back(std::move(h));
    }
  }
  return GradedIdeal<F>(f, std::move(gens));
}

}  // namespace ratcurve
