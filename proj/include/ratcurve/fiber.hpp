#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/graded_ideal.hpp"
#include "ratcurve/matrix.hpp"
#include "ratcurve/parameterization.hpp"
#include "ratcurve/syzygy.hpp"

namespace ratcurve {

struct SamplingOptions {
  int samples = 7;        // general points drawn for the map degree
  int retry_budget = 32;  // draws allowed when a sample must be replaced
};

/// values[n] = HF(n) for n = 0..values.size()-1.
struct HilbertTable {
  std::vector<std::size_t> values;
};

template <class F>
struct FiberReport {
  ProjPointN<F> point;
  bool on_image;
  BinaryForm<F> fiber_form;  // monic gcd of the row ideal
  int fiber_degree;
};

struct MultiplicityResult {
  std::size_t e;
  HilbertTable hf;
};

struct MapDegreeResult {
  int r;
  std::vector<int> sample_degrees;
  MultiplicityResult multiplicity;
};

/// [g_1(q) : ... : g_n(q)]; never zero because the g_i have no common zero.
template <class F>
ProjPointN<F> apply_map(const Parameterization<F>& p, const ProjPoint1<F>& q) {
  std::vector<typename F::Element> coords;
  for (const auto& g : p.gens()) coords.push_back(eval(g, q));
  return ProjPointN<F>(p.field(), std::move(coords));
}

/// The row vector point * phi (entries may be zero).
template <class F>
std::vector<BinaryForm<F>> row_vector(const SyzygyMatrix<F>& phi, const ProjPointN<F>& point) {
  if (point.size() != phi.rows()) {
    throw Error(ErrorCode::Usage, "point has " + std::to_string(point.size()) +
                                      " coordinates, expected " + std::to_string(phi.rows()));
  }
  std::vector<BinaryForm<F>> row;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    auto acc = BinaryForm<F>::zero(phi.entry(0, j).field());
    for (std::size_t i = 0; i < phi.rows(); ++i) {
      acc = acc + phi.entry(i, j).scaled(point[i]);
    }
    row.push_back(std::move(acc));
  }
  return row;
}

/// Generalized row ideal I_1(point * phi).
template <class F>
GradedIdeal<F> row_ideal(const SyzygyMatrix<F>& phi, const ProjPointN<F>& point) {
  auto row = row_vector(phi, point);
  std::erase_if(row, [](const auto& h) { return h.is_zero(); });
  if (row.empty()) throw Error(ErrorCode::ZeroRow, "point * phi vanishes identically");
  const F& f = row.front().field();
  return GradedIdeal<F>(f, std::move(row));
}

/// The fiber over a point is cut out by the saturation of its row ideal,
/// which in k[x,y] is the principal ideal of the gcd.
template <class F>
FiberReport<F> fiber(const Parameterization<F>& p, const SyzygyMatrix<F>& phi,
                     const ProjPointN<F>& point) {
  if (point.size() != p.size()) {
    throw Error(ErrorCode::Usage, "point has " + std::to_string(point.size()) +
                                      " coordinates, map has " + std::to_string(p.size()));
  }
  const auto ideal = row_ideal(phi, point);
  auto g = gcd_forms(ideal.gens());
  const int deg = g.degree();
  return FiberReport<F>{point, deg >= 1, std::move(g), deg};
}

/// e(A) for A = k[I_d]: grow A_n = span{b * g_i : b in A_{n-1}} inside R_{nd}
/// and read the slope of the Hilbert function once three consecutive first
/// differences agree at n >= d - size + 4. The image is a nondegenerate curve
/// of degree at most d, so its Hilbert function is polynomial from there on.
template <class F>
MultiplicityResult multiplicity_A(const Parameterization<F>& p) {
  const F& f = p.field();
  const int d = p.degree();
  const int cap = 2 * d + 4;
  const int settled = std::max(3, d - static_cast<int>(p.size()) + 4);
  HilbertTable hf;
  hf.values.push_back(1);
  std::vector<std::size_t> diffs{0};
  const bool monomial = std::all_of(p.gens().begin(), p.gens().end(),
                                    [](const auto& g) { return g.is_monomial(); });
  if (monomial) {
    // A_n is spanned by monomials: track the n-fold sumset of y-exponents.
    std::vector<std::size_t> exps;
    for (const auto& g : p.gens()) exps.push_back(g.leading_index());
    std::vector<char> reach{1};
    for (int n = 1; n <= cap; ++n) {
      std::vector<char> next(static_cast<std::size_t>(n * d) + 1, 0);
      for (std::size_t s = 0; s < reach.size(); ++s) {
        if (!reach[s]) continue;
        for (auto a : exps) next[s + a] = 1;
      }
      reach = std::move(next);
      hf.values.push_back(static_cast<std::size_t>(std::count(reach.begin(), reach.end(), 1)));
      diffs.push_back(hf.values[n] - hf.values[n - 1]);
      if (n >= settled && diffs[n] == diffs[n - 1] && diffs[n - 1] == diffs[n - 2]) {
        return {diffs[n], std::move(hf)};
      }
    }
    throw Error(ErrorCode::SlopeNotStabilized,
                "Hilbert function of k[I_d] did not stabilise by n = " + std::to_string(cap));
  }
  std::vector<std::vector<typename F::Element>> basis{{f.one()}};
  for (int n = 1; n <= cap; ++n) {
    const std::size_t cols = static_cast<std::size_t>(n * d) + 1;
    EchelonBuilder<F> slice(f, cols);
    for (const auto& b : basis) {
      for (const auto& g : p.gens()) {
        if (slice.full()) break;
        std::vector<typename F::Element> prod(cols, f.zero());
        const auto& gc = g.coeffs();
        for (std::size_t i = 0; i < b.size(); ++i) {
          if (f.is_zero(b[i])) continue;
          for (std::size_t k = 0; k < gc.size(); ++k) {
            prod[i + k] = f.add(prod[i + k], f.mul(b[i], gc[k]));
          }
        }
        slice.insert(std::move(prod));
      }
      if (slice.full()) break;
    }
    hf.values.push_back(slice.rank());
    diffs.push_back(hf.values[n] - hf.values[n - 1]);
    if (n >= settled && diffs[n] == diffs[n - 1] && diffs[n - 1] == diffs[n - 2]) {
      return {diffs[n], std::move(hf)};
    }
    basis = slice.rows();
  }
  throw Error(ErrorCode::SlopeNotStabilized,
              "Hilbert function of k[I_d] did not stabilise by n = " + std::to_string(cap));
}

/// Generic fiber degree r = [B:A]: the minimum fiber degree over random
/// image points, certified by r | every column degree and r * e(A) = d.
template <class F>
MapDegreeResult map_degree(const Parameterization<F>& p, const SyzygyMatrix<F>& phi, Rng& rng,
                           const SamplingOptions& opts = {}) {
  const F& f = p.field();
  std::vector<int> degrees;
  int budget = opts.retry_budget;
  while (static_cast<int>(degrees.size()) < opts.samples) {
    const auto q = ProjPoint1<F>::random(f, rng);
    try {
      degrees.push_back(fiber(p, phi, apply_map(p, q)).fiber_degree);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroRow || --budget < 0) throw;
    }
  }
  const int r = *std::min_element(degrees.begin(), degrees.end());
  auto mult = multiplicity_A(p);
  for (int dj : phi.col_degrees()) {
    if (r < 1 || dj % r != 0) {
      throw Error(ErrorCode::CertificationFailed,
                  "sampled map degree " + std::to_string(r) + " does not divide column degree " +
                      std::to_string(dj));
    }
  }
  if (static_cast<std::size_t>(r) * mult.e != static_cast<std::size_t>(p.degree())) {
    throw Error(ErrorCode::CertificationFailed,
                "sampled map degree " + std::to_string(r) + " times e(A) = " + std::to_string(mult.e) +
                    " differs from d = " + std::to_string(p.degree()));
  }
  return {r, std::move(degrees), std::move(mult)};
}

/// j(I) = d * r * e(A); equals d^2 for m-primary ideals in two variables.
inline std::size_t j_multiplicity(int d, int r, std::size_t e) {
  const std::size_t j = static_cast<std::size_t>(d) * static_cast<std::size_t>(r) * e;
  if (j != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "j-multiplicity " + std::to_string(j) + " differs from d^2");
  }
  return j;
}

template <class F>
std::size_t j_multiplicity(const Parameterization<F>& p, const MapDegreeResult& md) {
  return j_multiplicity(p.degree(), md.r, md.multiplicity.e);
}

}  // namespace ratcurve
