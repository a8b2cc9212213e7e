#include "checks.hpp"

#include <algorithm>

#include "ratcurve/analysis.hpp"
#include "ratcurve/poly_io.hpp"

namespace ratcurve::app {
namespace {

using Form = BinaryForm<PrimeField>;

Form random_form(const PrimeField& f, Rng& rng, int degree) {
  std::vector<PrimeField::Element> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = f.random(rng);
  if (f.is_zero(c.front())) c.front() = f.one();
  return Form::from_coeffs(f, std::move(c));
}

// Adds x^D to one entry, so phi no longer annihilates the generators.
SyzygyMatrix<PrimeField> corrupt(const SyzygyMatrix<PrimeField>& phi) {
  if (phi.cols() == 0) return phi;
  auto cols = phi.columns();
  auto& c = cols.front();
  const auto& f = c.front().field();
  c.front() = c.front() + Form::monomial(f, phi.col_degrees().front(), 0);
  return SyzygyMatrix<PrimeField>(std::move(cols), phi.col_degrees());
}

}  // namespace

Mutation parse_mutation(const std::string& name) {
  if (name.empty() || name == "none") return Mutation::None;
  if (name == "map-degree") return Mutation::MapDegree;
  if (name == "syzygy") return Mutation::Syzygy;
  throw Error(ErrorCode::Usage, "unknown mutation '" + name + "' (expected map-degree or syzygy)");
}

std::string describe(const std::vector<Form>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format_form(gens[i]);
  }
  return out + ")";
}

MonomialCheck check_monomial(const PrimeField& f, const MonomialParam& m, std::uint64_t seed,
                             Mutation mut) {
  MonomialCheck out{m};
  out.oracle_r = oracle_degree(m);
  try {
    Rng rng(seed);
    const auto p = to_parameterization(f, m);
    auto phi = hilbert_burch(p);
    if (mut == Mutation::Syzygy) phi = corrupt(phi);
    auto want = m.col_degrees();
    auto got = phi.col_degrees();
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    out.phi_matches_oracle = got == want && verify_hilbert_burch(p, phi) &&
                             verify_hilbert_burch(p, oracle_phi(f, m));
    const auto md = map_degree(p, phi, rng);
    out.r = md.r + (mut == Mutation::MapDegree ? 1 : 0);
    out.degree_matches = out.r == out.oracle_r;

    const auto basis = extract_reparam_basis(p, phi, md.r, rng);
    const auto core = core_ideal(p, basis.f1, basis.f2, md.r);
    const auto mono = as_monomial_ideal(core.core);
    if (!mono) throw Error(ErrorCode::NotMonomial, "core of a monomial map is not monomial");
    const bool closed = ideal_equals(newton_closure(*mono), *mono);
    out.closure_iff = closed == (out.r == 1);
  } catch (const Error& e) {
    out.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return out;
}

std::vector<DenseCase> dense_corpus(const PrimeField& f, Rng& rng, int count) {
  std::vector<DenseCase> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = static_cast<int>(rng.between(2, 6));
    const int d = static_cast<int>(rng.between(n, 15));
    std::vector<int> rs;
    for (int r = 2; r <= d; ++r) {
      if (d % r == 0 && d / r + 1 >= n) rs.push_back(r);
    }
    DenseCase c;
    if (!rs.empty() && rng.below(3) == 0) {
      c.composed_r = rs[rng.below(rs.size())];
      const auto f1 = random_form(f, rng, c.composed_r);
      const auto f2 = random_form(f, rng, c.composed_r);
      for (int i = 0; i < n; ++i) c.gens.push_back(substitute(random_form(f, rng, d / c.composed_r), f1, f2));
    } else {
      for (int i = 0; i < n; ++i) c.gens.push_back(random_form(f, rng, d));
    }
    try {
      Parameterization<PrimeField>::create(c.gens);
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

DenseCheck check_dense(const PrimeField& f, const DenseCase& c, std::uint64_t seed, Mutation mut) {
  DenseCheck out;
  try {
    Rng rng(seed);
    const auto p = Parameterization<PrimeField>::create(c.gens);
    out.d = p.degree();
    out.n = p.size();
    auto phi = hilbert_burch(p);
    if (mut == Mutation::Syzygy) phi = corrupt(phi);
    out.col_degrees = phi.col_degrees();
    out.hb_valid = verify_hilbert_burch(p, phi);

    const auto a = birational_certificates(p, phi, rng);
    out.r = a.r + (mut == Mutation::MapDegree ? 1 : 0);
    out.e = a.eA;
    out.j = a.j;
    out.degree_identity = static_cast<std::size_t>(out.r) * out.e == static_cast<std::size_t>(out.d);
    out.divides_columns = std::all_of(out.col_degrees.begin(), out.col_degrees.end(),
                                      [&](int dj) { return out.r > 0 && dj % out.r == 0; });
    out.j_is_d_squared = out.j == static_cast<std::size_t>(out.d) * static_cast<std::size_t>(out.d);
    out.consistent = a.consistent;
    out.prime_degree_applicable = a.corn4.applicable;
    out.prime_degree_ok = !a.corn4.applicable || a.corn4.predicts_birational == (out.r == 1);

    const auto rep = reparameterize(p, phi, a.r, rng);
    out.reparam_coprime = rep.verification.regular_sequence;
    out.reparam_degree = rep.f1.degree() == out.r && rep.f2.degree() == out.r;
    out.reparam_extension = rep.verification.extension;
    out.reparam_degree_one = rep.verification.new_degree_one;

    // The core lies in every minimal reduction; two random pairs of
    // combinations of the generators are minimal reductions.
    bool inside = true;
    for (int k = 0; k < 2 && inside; ++k) {
      std::vector<Form> red;
      for (int t = 0; t < 2; ++t) {
        auto acc = Form::zero(f);
        for (const auto& g : p.gens()) acc = acc + g.scaled(f.random(rng));
        red.push_back(acc);
      }
      if (red[0].is_zero() || red[1].is_zero()) continue;
      const GradedIdeal<PrimeField> j(f, red);
      for (const auto& g : a.core.core.gens()) inside = inside && contains(j, g);
    }
    out.core_in_reductions = inside;
    out.core_iff = a.core.equals_m_power == (out.r == 1);
  } catch (const Error& e) {
    out.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return out;
}

}  // namespace ratcurve::app
