#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/graded_ideal.hpp"
#include "ratcurve/parameterization.hpp"
#include "ratcurve/syzygy.hpp"

namespace ratcurve {

/// Monomial parameterization with exponents 0 = a_1 < ... < a_n = d. The
/// generators are g_i = x^(d - a_i) y^(a_i), listed by descending power of x.
struct MonomialParam {
  int d;
  std::vector<int> exponents;

  static MonomialParam create(int d, std::vector<int> exponents) {
    if (exponents.size() < 2) throw Error(ErrorCode::Usage, "monomial parameterization needs n >= 2");
    if (exponents.front() != 0 || exponents.back() != d) {
      throw Error(ErrorCode::Usage, "exponents must start at 0 and end at d");
    }
    for (std::size_t i = 1; i < exponents.size(); ++i) {
      if (exponents[i] <= exponents[i - 1]) {
        throw Error(ErrorCode::Usage, "exponents must be strictly increasing");
      }
    }
    return {d, std::move(exponents)};
  }

  std::size_t size() const { return exponents.size(); }

  std::vector<int> col_degrees() const {
    std::vector<int> out;
    for (std::size_t j = 0; j + 1 < exponents.size(); ++j) out.push_back(exponents[j + 1] - exponents[j]);
    return out;
  }
};

template <class F>
Parameterization<F> to_parameterization(const F& field, const MonomialParam& m) {
  std::vector<BinaryForm<F>> gens;
  for (int a : m.exponents) gens.push_back(BinaryForm<F>::monomial(field, m.d - a, a));
  return Parameterization<F>::create(std::move(gens));
}

/// Bidiagonal Hilbert-Burch matrix: column j carries y^(D_j) in row j and
/// -x^(D_j) in row j+1, D_j = a_(j+1) - a_j.
template <class F>
SyzygyMatrix<F> oracle_phi(const F& field, const MonomialParam& m) {
  const std::size_t n = m.size();
  const auto degs = m.col_degrees();
  std::vector<std::vector<BinaryForm<F>>> cols;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::vector<BinaryForm<F>> col(n, BinaryForm<F>::zero(field));
    col[j] = BinaryForm<F>::monomial(field, 0, degs[j]);
    col[j + 1] = BinaryForm<F>::monomial(field, degs[j], 0, field.neg(field.one()));
    cols.push_back(std::move(col));
  }
  return SyzygyMatrix<F>(std::move(cols), degs);
}

/// [B:A] for monomial maps: gcd of the column degrees.
inline int oracle_degree(const MonomialParam& m) {
  int g = 0;
  for (int dj : m.col_degrees()) g = std::gcd(g, dj);
  return g;
}

/// Integral closure of a monomial ideal: every x^i y^j on or above the lower
/// convex hull of the exponent set, translated by the positive orthant.
template <class F>
GradedIdeal<F> newton_closure(const GradedIdeal<F>& j) {
  std::vector<std::pair<long, long>> pts;  // (x-exponent, y-exponent)
  for (const auto& g : j.gens()) {
    if (!g.is_monomial()) throw Error(ErrorCode::NotMonomial, "newton_closure needs monomial generators");
    const long b = static_cast<long>(g.leading_index());
    pts.emplace_back(g.degree() - b, b);
  }
  long min_a = pts.front().first;
  long max_a = pts.front().first;
  for (const auto& [a, b] : pts) {
    min_a = std::min(min_a, a);
    max_a = std::max(max_a, a);
  }
  auto ceil_div = [](long num, long den) {  // den > 0
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
  };
  const F& f = j.field();
  std::vector<BinaryForm<F>> gens;
  for (long i = min_a; i <= max_a; ++i) {
    long best = std::numeric_limits<long>::max();
    for (const auto& [a, b] : pts) {
      if (a <= i) best = std::min(best, b);
    }
    // Points of conv(pts) on the line x = i lie on segments straddling it.
    for (const auto& [a1, b1] : pts) {
      for (const auto& [a2, b2] : pts) {
        if (!(a1 < i && i < a2)) continue;
        const long num = b1 * (a2 - a1) + (b2 - b1) * (i - a1);
        best = std::min(best, ceil_div(num, a2 - a1));
      }
    }
    gens.push_back(BinaryForm<F>::monomial(f, static_cast<int>(i), static_cast<int>(best)));
  }
  return GradedIdeal<F>(f, std::move(gens));
}

/// All monomial parameterizations of degree d with at most max_n generators.
inline std::vector<MonomialParam> monomial_corpus_exhaustive(int d, std::size_t max_n) {
  std::vector<MonomialParam> out;
  const int interior = d - 1;
  for (unsigned long mask = 0; mask < (1UL << interior); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 2 > max_n) continue;
    std::vector<int> e{0};
    for (int k = 0; k < interior; ++k) {
      if (mask & (1UL << k)) e.push_back(k + 1);
    }
    e.push_back(d);
    out.push_back(MonomialParam::create(d, std::move(e)));
  }
  return out;
}

/// n uniform in [2, min(d+1, max_n)], interior exponents uniform.
inline MonomialParam random_monomial_param(Rng& rng, int d, std::size_t max_n) {
  const auto n_hi = std::min<std::int64_t>(d + 1, static_cast<std::int64_t>(max_n));
  const auto n = static_cast<std::size_t>(rng.between(2, n_hi));
  std::vector<int> pool;
  for (int k = 1; k < d; ++k) pool.push_back(k);
  // Partial Fisher-Yates for n-2 distinct interior exponents.
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> e{0};
  e.insert(e.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n - 2));
  e.push_back(d);
  std::sort(e.begin(), e.end());
  return MonomialParam::create(d, std::move(e));
}

}  // namespace ratcurve
