#include "app.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "ratcurve/analysis.hpp"
#include "ratcurve/report_json.hpp"

namespace ratcurve::app {
namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::CertificationFailed:
    case ErrorCode::SlopeNotStabilized:
    case ErrorCode::ResamplingExhausted:
    case ErrorCode::ZeroRow:
    case ErrorCode::InternalInvariantViolation:
      return kCertificationError;
    default:
      return kInputError;
  }
}

CommandResult failure(const Error& e) {
  return {exit_code_for(e.code()), "", "error: " + std::string(to_string(e.code())) + ": " + e.what()};
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

FieldConfig effective_config(const Instance& inst, const Options& opt) {
  auto cfg = inst.field;
  if (opt.seed) cfg.seed = *opt.seed;
  return cfg;
}

Json envelope(const std::string& command, const FieldConfig& cfg, const Instance& inst, const Options& opt) {
  Json out{{"command", command}, {"field", field_json(cfg)}, {"generators", inst.generator_text}};
  if (!opt.deterministic) out["timestamp"] = timestamp();
  return out;
}

void render_plain(std::ostringstream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_plain(os, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_plain(os, j[i], prefix + "[" + std::to_string(i) + "]");
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

std::string render(const Json& j, const Options& opt) {
  if (!opt.plain) return j.dump(2) + "\n";
  std::ostringstream os;
  render_plain(os, j, "");
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

template <class F>
ProjPointN<F> parse_point(const F& f, const std::string& text, std::size_t n) {
  if (text.empty()) throw Error(ErrorCode::Usage, "--point is required, e.g. --point 1:1:1");
  std::vector<typename F::Element> coords;
  for (const auto& part : split(text, ':')) {
    if (part.find_first_not_of(' ') == std::string::npos) {
      throw Error(ErrorCode::Parse, "empty point coordinate in '" + text + "'");
    }
    const auto terms = parse_terms(part);
    mpq_class v = 0;
    for (const auto& [exps, c] : terms) {
      if (exps.first != 0 || exps.second != 0) {
        throw Error(ErrorCode::Parse, "point coordinate '" + part + "' is not a number");
      }
      v = c;
    }
    coords.push_back(f.from_mpq(v));
  }
  if (coords.size() != n) {
    throw Error(ErrorCode::Usage, "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                      std::to_string(n));
  }
  if (std::all_of(coords.begin(), coords.end(), [&](const auto& c) { return f.is_zero(c); })) {
    throw Error(ErrorCode::Usage, "point coordinates are all zero");
  }
  return ProjPointN<F>(f, std::move(coords));
}

template <class Fn>
CommandResult with_field(const Instance& inst, Fn&& fn) {
  if (inst.field.is_prime_mode()) return fn(PrimeField(inst.field.prime()));
  return fn(RationalField{});
}

}  // namespace

CommandResult cmd_analyze(const Instance& inst, const Options& opt) {
  const auto cfg = effective_config(inst, opt);
  return with_field(inst, [&](const auto& f) {
    try {
      const auto p = build_parameterization(f, inst);
      const auto phi = hilbert_burch(p);
      Rng rng(cfg.seed);
      const auto a = birational_certificates(p, phi, rng, SamplingOptions{opt.samples});
      auto out = envelope("analyze", cfg, inst, opt);
      out.update(analysis_json(a));
      return CommandResult{kOk, render(out, opt), ""};
    } catch (const Error& e) {
      return failure(e);
    }
  });
}

CommandResult cmd_fiber(const Instance& inst, const Options& opt) {
  const auto cfg = effective_config(inst, opt);
  return with_field(inst, [&](const auto& f) {
    try {
      const auto p = build_parameterization(f, inst);
      const auto point = parse_point(f, opt.point, p.size());
      const auto phi = hilbert_burch(p);
      auto out = envelope("fiber", cfg, inst, opt);
      out.update(fiber_json(f, fiber(p, phi, point)));
      return CommandResult{kOk, render(out, opt), ""};
    } catch (const Error& e) {
      return failure(e);
    }
  });
}

CommandResult cmd_reparam(const Instance& inst, const Options& opt) {
  const auto cfg = effective_config(inst, opt);
  return with_field(inst, [&](const auto& f) {
    try {
      const auto p = build_parameterization(f, inst);
      const auto phi = hilbert_burch(p);
      Rng rng(cfg.seed);
      const SamplingOptions so{opt.samples};
      const auto md = map_degree(p, phi, rng, so);
      auto out = envelope("reparam", cfg, inst, opt);
      out.update(reparam_json(reparameterize(p, phi, md.r, rng, so)));
      return CommandResult{kOk, render(out, opt), ""};
    } catch (const Error& e) {
      return failure(e);
    }
  });
}

CommandResult cmd_core(const Instance& inst, const Options& opt) {
  const auto cfg = effective_config(inst, opt);
  return with_field(inst, [&](const auto& f) {
    try {
      const auto p = build_parameterization(f, inst);
      const auto phi = hilbert_burch(p);
      Rng rng(cfg.seed);
      const SamplingOptions so{opt.samples};
      const auto md = map_degree(p, phi, rng, so);
      const auto basis = extract_reparam_basis(p, phi, md.r, rng, so);
      auto out = envelope("core", cfg, inst, opt);
      out["f1"] = format_form(basis.f1);
      out["f2"] = format_form(basis.f2);
      out.update(core_json(core_ideal(p, basis.f1, basis.f2, md.r), basis.f1, basis.f2, p.degree()));
      return CommandResult{kOk, render(out, opt), ""};
    } catch (const Error& e) {
      return failure(e);
    }
  });
}

CommandResult run_instance_command(const std::string& command, const std::string& path, const Options& opt) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const Error& e) {
    return {kInputError, "", "error: " + std::string(to_string(e.code())) + ": " + e.what()};
  }
  if (command == "analyze") return cmd_analyze(inst, opt);
  if (command == "fiber") return cmd_fiber(inst, opt);
  if (command == "reparam") return cmd_reparam(inst, opt);
  if (command == "core") return cmd_core(inst, opt);
  return {kInputError, "", "error: unknown command '" + command + "'"};
}

}  // namespace ratcurve::app
