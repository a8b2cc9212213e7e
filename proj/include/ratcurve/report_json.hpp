#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ratcurve/analysis.hpp"
#include "ratcurve/fiber.hpp"
#include "ratcurve/field.hpp"
#include "ratcurve/poly_io.hpp"
#include "ratcurve/reparam.hpp"
#include "ratcurve/syzygy.hpp"

namespace ratcurve {

using Json = nlohmann::ordered_json;

/// {"mode": "prime"|"rational", "p": ..., "seed": ...}
Json field_json(const FieldConfig& cfg);
Json hilbert_json(const HilbertTable& hf);
Json certificate_json(const std::vector<CertificateRow>& rows);

template <class F>
Json forms_json(const std::vector<BinaryForm<F>>& hs, VarNames vars = kXY) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back(format_form(h, vars));
  return out;
}

/// Dense matrix of polynomial strings, row-major, plus the column degrees.
template <class F>
Json syzygy_json(const SyzygyMatrix<F>& phi, VarNames vars = kXY) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < phi.cols(); ++j) row.push_back(format_form(phi.entry(i, j), vars));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(rows)}, {"colDegrees", phi.col_degrees()}};
}

template <class F>
Json fiber_json(const F& f, const FiberReport<F>& rep) {
  Json pt = Json::array();
  for (const auto& c : rep.point.coords()) pt.push_back(f.to_string(c));
  return Json{{"point", std::move(pt)},
              {"onImage", rep.on_image},
              {"fiberForm", format_form(rep.fiber_form)},
              {"fiberDegree", rep.fiber_degree}};
}

/// Compact name for the core: "m^k" when it is a power of the maximal
/// ideal, "(f1, f2)^k" otherwise.
template <class F>
std::string core_description(const CoreReport<F>& c, const BinaryForm<F>& f1, const BinaryForm<F>& f2,
                             int d) {
  const int k = 2 * c.e - 1;
  const auto exp = [](int t) { return t == 1 ? std::string() : "^" + std::to_string(t); };
  if (c.equals_m_power) return "m" + exp(2 * d - 1);
  return "(" + format_form(f1) + ", " + format_form(f2) + ")" + exp(k);
}

template <class F>
Json core_json(const CoreReport<F>& c, const BinaryForm<F>& f1, const BinaryForm<F>& f2, int d) {
  return Json{{"r", c.r},
              {"e", c.e},
              {"core", core_description(c, f1, f2, d)},
              {"coreGenerators", forms_json(c.core.gens())},
              {"equalsMPower", c.equals_m_power},
              {"integrallyClosed",
               {{"value", c.integrally_closed.value}, {"provenance", to_string(c.integrally_closed.provenance)}}},
              {"canonicalModule", c.canonical}};
}

template <class F>
Json analysis_json(const AnalysisReport<F>& a) {
  Json corn4{{"applicable", a.corn4.applicable}};
  if (a.corn4.applicable) {
    corn4["entryDegree"] = a.corn4.entry_degree;
    corn4["mu"] = a.corn4.mu;
    corn4["predictsBirational"] = a.corn4.predicts_birational;
  }
  return Json{{"d", a.d},
              {"n", a.n},
              {"r", a.r},
              {"eA", a.eA},
              {"j", a.j},
              {"birational", a.birational},
              {"colDegrees", a.col_degrees},
              {"sampleDegrees", a.sample_degrees},
              {"hfA", hilbert_json(a.hfA)},
              {"phi", syzygy_json(a.phi)},
              {"f1", format_form(a.basis.f1)},
              {"f2", format_form(a.basis.f2)},
              {"core", core_json(a.core, a.basis.f1, a.basis.f2, a.d)},
              {"c3", certificate_json(a.c3)},
              {"primeDegreeCriterion", std::move(corn4)},
              {"consistent", a.consistent}};
}

template <class F>
Json reparam_json(const ReparamResult<F>& res) {
  Json out{{"r", res.r}};
  if (res.r == 1) out["notice"] = "map is birational; reparameterization is the identity";
  out["f1"] = format_form(res.f1);
  out["f2"] = format_form(res.f2);
  out["newGens"] = forms_json(res.new_gens, kNewXY);
  out["rewrittenPhi"] = syzygy_json(res.rewritten_phi, kNewXY);
  out["phiRoute"] = res.route == PhiRoute::Substituted ? "substituted" : "recomputed";
  out["fallbackEvents"] = res.fallback_events;
  out["verification"] = Json{{"regularSequence", res.verification.regular_sequence},
                             {"extension", res.verification.extension},
                             {"newDegreeOne", res.verification.new_degree_one},
                             {"rewrittenPhiValid", res.verification.rewritten_phi_valid}};
  return out;
}

}  // namespace ratcurve
