#include "ratcurve/report_json.hpp"

namespace ratcurve {

Json field_json(const FieldConfig& cfg) {
  Json out;
  if (cfg.is_prime_mode()) {
    out["mode"] = "prime";
    out["p"] = cfg.prime();
  } else {
    out["mode"] = "rational";
  }
  out["seed"] = cfg.seed;
  return out;
}

Json hilbert_json(const HilbertTable& hf) { return Json(hf.values); }

Json certificate_json(const std::vector<CertificateRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"index", r.index},
                       {"statement", r.statement},
                       {"holds", r.holds},
                       {"provenance", to_string(r.provenance)}});
  }
  return out;
}

}  // namespace ratcurve
