#include "ratcurve/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ratcurve {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

std::string_view header_value(std::string_view line, std::string_view key, std::size_t lineno) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || trim(line.substr(0, colon)) != key) {
    throw Error(ErrorCode::Parse, at_line(lineno, "expected '" + std::string(key) + ": ...'"));
  }
  return trim(line.substr(colon + 1));
}

std::uint64_t parse_u64(std::string_view s, std::size_t lineno, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Parse, at_line(lineno, std::string("malformed ") + what + " '" + std::string(s) + "'"));
  }
  return v;
}

FieldConfig::Prime parse_prime(std::string_view s, std::size_t lineno) {
  const auto p = parse_u64(s, lineno, "prime");
  if (p < kMinPrime || p >= kMaxPrime) {
    throw Error(ErrorCode::InvalidField, at_line(lineno, "prime " + std::to_string(p) +
                                                             " outside [2^20, 2^62)"));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField, at_line(lineno, std::to_string(p) + " is not prime"));
  }
  return {p};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(lineno, line);
  }
  if (lines.size() < 2) throw Error(ErrorCode::Parse, "instance needs 'field:' and 'seed:' header lines");

  Instance inst;
  const auto field = header_value(lines[0].second, "field", lines[0].first);
  if (field == "rational") {
    inst.field.mode = FieldConfig::Rational{};
  } else if (field.starts_with("prime")) {
    inst.field.mode = parse_prime(trim(field.substr(5)), lines[0].first);
  } else {
    throw Error(ErrorCode::InvalidField,
                at_line(lines[0].first, "field must be 'prime <p>' or 'rational'"));
  }
  inst.field.seed = parse_u64(header_value(lines[1].second, "seed", lines[1].first), lines[1].first, "seed");

  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto [ln, line] = lines[k];
    try {
      auto terms = parse_terms(line);
      to_form(RationalField{}, terms);  // homogeneity check
      inst.generator_text.emplace_back(line);
      inst.generators.push_back(std::move(terms));
    } catch (const Error& e) {
      throw Error(e.code(), at_line(ln, e.what()));
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

}  // namespace ratcurve
