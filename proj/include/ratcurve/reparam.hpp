#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"
#include "ratcurve/fiber.hpp"
#include "ratcurve/graded_ideal.hpp"
#include "ratcurve/matrix.hpp"
#include "ratcurve/mono_oracle.hpp"
#include "ratcurve/parameterization.hpp"
#include "ratcurve/poly_io.hpp"
#include "ratcurve/syzygy.hpp"

namespace ratcurve {

/// Degree-r forms with k[I_d] contained in k[f1, f2].
template <class F>
struct ReparamBasis {
  BinaryForm<F> f1;
  BinaryForm<F> f2;
  int attempts;
};

enum class PhiRoute {
  Substituted,  // every entry of the minimal phi lies in k[f1, f2]
  Recomputed,   // an entry did not; phi rebuilt from the rewritten generators
};

template <class F>
struct ReparamResult {
  int r;
  BinaryForm<F> f1;
  BinaryForm<F> f2;
  std::vector<BinaryForm<F>> new_gens;  // degree d/r, in variables X, Y
  SyzygyMatrix<F> rewritten_phi;        // over k[X, Y]
  PhiRoute route;
  std::vector<std::string> fallback_events;
  struct Verification {
    bool regular_sequence;  // gcd(f1, f2) constant
    bool extension;         // I'R = I after substituting f1, f2
    bool new_degree_one;    // the rewritten map is birational
    bool rewritten_phi_valid;
  } verification;
};

enum class Provenance { Computed, ComputedMonomial, DerivedByTheorem };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::ComputedMonomial: return "computed-monomial";
    case Provenance::DerivedByTheorem: return "derived-by-theorem";
  }
  return "unknown";
}

template <class F>
struct CoreReport {
  int r;
  int e;
  GradedIdeal<F> core;  // (f1, f2)^(2e - 1), generated in degree 2d - r
  bool equals_m_power;  // core == m^(2d - 1)
  struct {
    bool value;
    Provenance provenance;
  } integrally_closed;
  std::string canonical;  // generator-level description of the canonical module
};

/// Substitutes f1, f2 for X, Y in a form H(X, Y).
template <class F>
BinaryForm<F> substitute(const BinaryForm<F>& h, const BinaryForm<F>& f1, const BinaryForm<F>& f2) {
  const F& f = f1.field();
  if (h.is_zero()) return BinaryForm<F>::zero(f);
  const int m = h.degree();
  auto acc = BinaryForm<F>::zero(f);
  for (int i = 0; i <= m; ++i) {
    const auto& c = h.coeff(static_cast<std::size_t>(i));
    if (f.is_zero(c)) continue;
    acc = acc + (f1.pow(m - i) * f2.pow(i)).scaled(c);
  }
  return acc;
}

/// Writes h (degree m*r) as H(f1, f2) with H of degree m, by solving the
/// (m*r + 1) x (m + 1) linear system on the coefficients of f1^(m-i) f2^i.
/// nullopt when h is not in k[f1, f2].
template <class F>
std::optional<BinaryForm<F>> express_in_subring(const BinaryForm<F>& h, const BinaryForm<F>& f1,
                                                const BinaryForm<F>& f2) {
  const F& f = f1.field();
  const int r = f1.degree();
  if (f2.degree() != r) throw Error(ErrorCode::DegreeMismatch, "f1 and f2 must share a degree");
  if (h.is_zero()) return BinaryForm<F>::zero(f);
  if (h.degree() % r != 0) {
    throw Error(ErrorCode::DegreeMismatch, "degree " + std::to_string(h.degree()) +
                                               " is not a multiple of " + std::to_string(r));
  }
  const int m = h.degree() / r;
  const std::size_t len = static_cast<std::size_t>(h.degree()) + 1;
  Matrix<F> sys(f, len, static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    const auto basis = f1.pow(m - i) * f2.pow(i);
    for (std::size_t k = 0; k < len; ++k) sys(k, static_cast<std::size_t>(i)) = basis.coeff(k);
  }
  const auto x = solve(sys, std::span<const typename F::Element>(h.coeffs()));
  if (!x) return std::nullopt;
  return BinaryForm<F>::from_coeffs(f, *x);
}

/// f_i = gcd of the row ideal at Psi(q_i) for random q_1, q_2, redrawn until
/// both have degree r and form a regular sequence. The pair returned is the
/// reduced echelon basis of span(f_1, f_2): monic, ordered, and coprime.
template <class F>
ReparamBasis<F> extract_reparam_basis(const Parameterization<F>& p, const SyzygyMatrix<F>& phi, int r,
                                      Rng& rng, const SamplingOptions& opts = {}) {
  const F& f = p.field();
  for (int attempt = 1; attempt <= opts.retry_budget; ++attempt) {
    try {
      auto f1 = fiber(p, phi, apply_map(p, ProjPoint1<F>::random(f, rng))).fiber_form;
      auto f2 = fiber(p, phi, apply_map(p, ProjPoint1<F>::random(f, rng))).fiber_form;
      if (f1.degree() != r || f2.degree() != r) continue;
      const std::vector<BinaryForm<F>> pair{f1, f2};
      if (li_dim(pair, r) != 2 || !gcd_forms(pair).is_constant()) continue;
      // Any basis of the pencil works; the reduced echelon basis is
      // independent of the sampled points.
      Matrix<F> m(f, 2, static_cast<std::size_t>(r) + 1);
      for (std::size_t k = 0; k <= static_cast<std::size_t>(r); ++k) {
        m(0, k) = f1.coeff(k);
        m(1, k) = f2.coeff(k);
      }
      const auto red = rref(std::move(m)).reduced;
      auto row = [&](std::size_t i) {
        std::vector<typename F::Element> c(static_cast<std::size_t>(r) + 1);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = red(i, k);
        return BinaryForm<F>::from_coeffs(f, std::move(c));
      };
      return {row(0), row(1), attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroRow) throw;
    }
  }
  throw Error(ErrorCode::ResamplingExhausted,
              "no admissible pair (f1, f2) within " + std::to_string(opts.retry_budget) + " draws");
}

/// Rewrites the generators and phi over k[f1, f2]. Entries of phi that fall
/// outside the subring trigger a recomputation of phi for the rewritten
/// generators; that event is recorded, not raised.
template <class F>
ReparamResult<F> reparameterize(const Parameterization<F>& p, const SyzygyMatrix<F>& phi, int r,
                                Rng& rng, const SamplingOptions& opts = {}) {
  const F& f = p.field();
  std::vector<std::string> events;
  for (int round = 0; round < opts.retry_budget; ++round) {
    auto basis = extract_reparam_basis(p, phi, r, rng, opts);
    std::vector<BinaryForm<F>> new_gens;
    for (const auto& g : p.gens()) {
      auto h = express_in_subring(g, basis.f1, basis.f2);
      if (!h) break;
      new_gens.push_back(std::move(*h));
    }
    if (new_gens.size() != p.size()) {
      events.push_back("generator outside k[f1,f2]; redrawing f1, f2");
      continue;
    }
    std::optional<Parameterization<F>> new_param;
    try {
      new_param = Parameterization<F>::create(new_gens);
    } catch (const Error&) {
      events.push_back("rewritten generators invalid; redrawing f1, f2");
      continue;
    }

    PhiRoute route = PhiRoute::Substituted;
    std::vector<std::vector<BinaryForm<F>>> cols;
    std::vector<int> degs;
    for (std::size_t j = 0; j < phi.cols() && route == PhiRoute::Substituted; ++j) {
      std::vector<BinaryForm<F>> col;
      for (std::size_t i = 0; i < phi.rows(); ++i) {
        auto h = express_in_subring(phi.entry(i, j), basis.f1, basis.f2);
        if (!h) {
          route = PhiRoute::Recomputed;
          events.push_back("phi entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside k[f1,f2]; recomputing phi for the rewritten generators");
          break;
        }
        col.push_back(std::move(*h));
      }
      cols.push_back(std::move(col));
      degs.push_back(phi.col_degrees()[j] / r);
    }
    auto rewritten = route == PhiRoute::Substituted
                         ? SyzygyMatrix<F>(std::move(cols), std::move(degs))
                         : hilbert_burch(*new_param);

    typename ReparamResult<F>::Verification v{};
    v.regular_sequence = gcd_forms({basis.f1, basis.f2}).is_constant();
    std::vector<BinaryForm<F>> pulled_back;
    for (const auto& h : new_gens) pulled_back.push_back(substitute(h, basis.f1, basis.f2));
    v.extension = ideal_equals(GradedIdeal<F>(f, pulled_back), GradedIdeal<F>(f, p.gens()));
    v.rewritten_phi_valid = verify_hilbert_burch(*new_param, rewritten);
    try {
      v.new_degree_one = map_degree(*new_param, hilbert_burch(*new_param), rng, opts).r == 1;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CertificationFailed) throw;
      v.new_degree_one = false;
    }
    return ReparamResult<F>{r,         std::move(basis.f1), std::move(basis.f2), std::move(new_gens),
                            std::move(rewritten), route, std::move(events), v};
  }
  throw Error(ErrorCode::ResamplingExhausted, "could not rewrite the generators over k[f1,f2]");
}

/// adj(m^t) = m^(t-1); m^0 is the unit ideal.
template <class F>
GradedIdeal<F> adjoint_of_m_power(const F& field, int t) {
  if (t < 1) throw Error(ErrorCode::Usage, "adjoint_of_m_power needs t >= 1");
  return maximal_ideal_power(field, t - 1);
}

/// Generator-level description of the canonical module of the Rees ring,
/// f1^2 t (f1,f2)^(e-1) R((f1,f2)^e).
template <class F>
std::string canonical_module_description(const BinaryForm<F>& f1, const BinaryForm<F>& f2, int e) {
  const std::string a = "(" + format_form(f1) + ")";
  const std::string pair = "(" + format_form(f1) + ", " + format_form(f2) + ")";
  std::string out = a + "^2*t";
  if (e - 1 > 1) {
    out += "*" + pair + "^" + std::to_string(e - 1);
  } else if (e - 1 == 1) {
    out += "*" + pair;
  }
  out += "*R(" + pair + (e > 1 ? "^" + std::to_string(e) : "") + ")";
  return out;
}

/// core(I) = (f1, f2)^(2d/r - 1).
template <class F>
CoreReport<F> core_ideal(const Parameterization<F>& p, const BinaryForm<F>& f1, const BinaryForm<F>& f2,
                         int r) {
  const F& f = p.field();
  const int d = p.degree();
  const int e = d / r;
  auto core = power(GradedIdeal<F>(f, {f1, f2}), 2 * e - 1);
  const bool equals_m_power = ideal_equals(core, maximal_ideal_power(f, 2 * d - 1));
  CoreReport<F> out{r, e, core, equals_m_power, {r == 1, Provenance::DerivedByTheorem},
                    canonical_module_description(f1, f2, e)};
  if (auto mono = as_monomial_ideal(core)) {
    out.integrally_closed = {ideal_equals(newton_closure(*mono), *mono), Provenance::ComputedMonomial};
  }
  return out;
}

}  // namespace ratcurve
