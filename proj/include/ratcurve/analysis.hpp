#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ratcurve/fiber.hpp"
#include "ratcurve/graded_ideal.hpp"
#include "ratcurve/parameterization.hpp"
#include "ratcurve/reparam.hpp"
#include "ratcurve/syzygy.hpp"

namespace ratcurve {

/// One row of the birationality table. Rows marked DerivedByTheorem carry
/// the value the equivalences force; they are not independent computations.
struct CertificateRow {
  int index;
  std::string statement;
  bool holds;
  Provenance provenance;
};

/// Birationality test for phi whose entries all share one prime degree:
/// birational iff the ideal of entries needs at least three generators.
struct PrimeDegreeCriterion {
  bool applicable = false;
  int entry_degree = 0;
  std::size_t mu = 0;
  bool predicts_birational = false;
};

template <class F>
struct AnalysisReport {
  int d;
  std::size_t n;
  int r;
  std::size_t eA;
  std::size_t j;
  bool birational;
  HilbertTable hfA;
  std::vector<int> col_degrees;
  std::vector<int> sample_degrees;
  std::vector<CertificateRow> c3;
  PrimeDegreeCriterion corn4;
  /// Computed rows agree with each other (and row 9 implies row 1).
  bool consistent;
  SyzygyMatrix<F> phi;
  ReparamBasis<F> basis;
  CoreReport<F> core;
};

inline bool is_small_prime(int v) {
  if (v < 2) return false;
  for (int k = 2; k * k <= v; ++k) {
    if (v % k == 0) return false;
  }
  return true;
}

template <class F>
PrimeDegreeCriterion prime_degree_criterion(const SyzygyMatrix<F>& phi) {
  PrimeDegreeCriterion out;
  const auto entries = phi.nonzero_entries();
  if (entries.empty()) return out;
  const int deg = entries.front().degree();
  for (const auto& e : entries) {
    if (e.degree() != deg) return out;
  }
  if (!is_small_prime(deg)) return out;
  out.applicable = true;
  out.entry_degree = deg;
  out.mu = min_gens(GradedIdeal<F>(entries.front().field(), entries));
  out.predicts_birational = out.mu >= 3;
  return out;
}

/// Full analysis of a parameterization: map degree, multiplicities, core and
/// the table of equivalent birationality statements.
template <class F>
AnalysisReport<F> birational_certificates(const Parameterization<F>& p, const SyzygyMatrix<F>& phi,
                                          Rng& rng, const SamplingOptions& opts = {}) {
  const F& f = p.field();
  const int d = p.degree();
  auto md = map_degree(p, phi, rng, opts);
  const int r = md.r;
  const std::size_t e = md.multiplicity.e;
  const std::size_t j = j_multiplicity(p, md);
  auto basis = extract_reparam_basis(p, phi, r, rng, opts);
  auto core = core_ideal(p, basis.f1, basis.f2, r);

  int col_gcd = 0;
  for (int dj : phi.col_degrees()) col_gcd = std::gcd(col_gcd, dj);

  // adj(I^2) = adj(m^(2d)) because m^(2d) is integral over I^2.
  const bool core_is_adjoint = ideal_equals(core.core, adjoint_of_m_power(f, 2 * d));

  const bool birational = r == 1;
  std::vector<CertificateRow> c3{
      {1, "the map is birational onto its image ([B:A] = 1)", birational, Provenance::Computed},
      {2, "the Rees ring R(I) satisfies Serre's condition R1", birational, Provenance::DerivedByTheorem},
      {3, "omega_R(I) = omega_R(m^d)", birational, Provenance::DerivedByTheorem},
      {4, "End(omega_R(I)) = End(omega_R(m^d))", birational, Provenance::DerivedByTheorem},
      {5, "e(A) = d", e == static_cast<std::size_t>(d), Provenance::Computed},
      {6, "core(I) = m^(2d-1)", core.equals_m_power, Provenance::Computed},
      {7, "core(I) = adj(I^2)", core_is_adjoint, Provenance::DerivedByTheorem},
      {8, "core(I) is integrally closed", core.integrally_closed.value, core.integrally_closed.provenance},
      {9, "gcd(column degrees of phi) = 1 (sufficient only)", col_gcd == 1, Provenance::Computed},
  };

  bool consistent = true;
  for (const auto& row : c3) {
    if (row.index == 9) continue;
    if (row.provenance != Provenance::DerivedByTheorem && row.holds != birational) consistent = false;
  }
  if (c3[8].holds && !birational) consistent = false;

  auto corn4 = prime_degree_criterion(phi);
  if (corn4.applicable && corn4.predicts_birational != birational) consistent = false;

  return AnalysisReport<F>{d,
                           p.size(),
                           r,
                           e,
                           j,
                           birational,
                           std::move(md.multiplicity.hf),
                           phi.col_degrees(),
                           std::move(md.sample_degrees),
                           std::move(c3),
                           corn4,
                           consistent,
                           phi,
                           std::move(basis),
                           std::move(core)};
}

}  // namespace ratcurve
