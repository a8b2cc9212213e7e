#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/error.hpp"

namespace ratcurve {

/// Variable names used when reading or printing a binary form.
struct VarNames {
  char first = 'x';
  char second = 'y';
};

inline constexpr VarNames kXY{'x', 'y'};
inline constexpr VarNames kNewXY{'X', 'Y'};

/// Polynomial in two variables with exact rational coefficients, keyed by
/// (exponent of first, exponent of second). Zero terms are dropped.
using TermMap = std::map<std::pair<int, int>, mpq_class>;

/// Parses sums of terms such as `3*x^2*y - y^3`, `1/2*x*y`, `-x`.
/// Throws Error(Parse) with a position on malformed input.
TermMap parse_terms(std::string_view text, VarNames vars = kXY);

/// Converts parsed terms to a homogeneous form; inhomogeneous input is
/// rejected with Error(Parse) naming the offending term.
template <class F>
BinaryForm<F> to_form(const F& field, const TermMap& terms) {
  int degree = -1;
  for (const auto& [exps, c] : terms) {
    const int deg = exps.first + exps.second;
    if (degree < 0) {
      degree = deg;
    } else if (deg != degree) {
      throw Error(ErrorCode::Parse, "inhomogeneous term of degree " + std::to_string(deg) +
                                        " in a form of degree " + std::to_string(degree));
    }
  }
  if (degree < 0) return BinaryForm<F>::zero(field);
  std::vector<typename F::Element> coeffs(static_cast<std::size_t>(degree) + 1, field.zero());
  for (const auto& [exps, c] : terms) {
    coeffs[static_cast<std::size_t>(exps.second)] = field.from_mpq(c);
  }
  return BinaryForm<F>::from_coeffs(field, std::move(coeffs));
}

template <class F>
BinaryForm<F> parse_form(const F& field, std::string_view text, VarNames vars = kXY) {
  return to_form(field, parse_terms(text, vars));
}

namespace detail {
std::string format_monomial(int a, int b, VarNames vars);
}

/// Canonical text: terms in descending power of the first variable,
/// e.g. `3*x^2*y - y^3`. The zero form prints as `0`.
template <class F>
std::string format_form(const BinaryForm<F>& h, VarNames vars = kXY) {
  if (h.is_zero()) return "0";
  const F& f = h.field();
  const int d = h.degree();
  std::string out;
  for (int i = 0; i <= d; ++i) {
    const auto& c = h.coeff(static_cast<std::size_t>(i));
    if (f.is_zero(c)) continue;
    std::string cs = f.to_string(c);
    const bool negative = !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = detail::format_monomial(d - i, i, vars);
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

}  // namespace ratcurve
