#include "ratcurve/poly_io.hpp"

#include <cctype>

namespace ratcurve {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, VarNames vars) : text_(text), vars_(vars) {}

  TermMap parse() {
    TermMap terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      mpq_class sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = -1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [exps, c] = parse_term();
      terms[exps] += sign * c;
      first = false;
      skip_space();
    }
    for (auto it = terms.begin(); it != terms.end();) {
      it = sgn(it->second) == 0 ? terms.erase(it) : std::next(it);
    }
    return terms;
  }

 private:
  std::pair<std::pair<int, int>, mpq_class> parse_term() {
    mpq_class coeff = 1;
    int a = 0;
    int b = 0;
    for (;;) {
      skip_space();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (c == vars_.first || c == vars_.second) {
        get();
        const int e = parse_exponent();
        (c == vars_.first ? a : b) += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    return {{a, b}, coeff};
  }

  mpq_class parse_number() {
    mpz_class num(read_digits());
    mpz_class den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      den = mpz_class(read_digits());
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  int parse_exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    get();
    skip_space();
    const std::string digits = read_digits();
    if (digits.size() > 6) fail("exponent too large");
    return std::stoi(digits);
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at position " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

  std::string_view text_;
  VarNames vars_;
  std::size_t pos_ = 0;
};

}  // namespace

TermMap parse_terms(std::string_view text, VarNames vars) {
  return TermParser(text, vars).parse();
}

namespace detail {

std::string format_monomial(int a, int b, VarNames vars) {
  std::string out;
  auto power = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  power(vars.first, a);
  power(vars.second, b);
  return out;
}

}  // namespace detail

}  // namespace ratcurve
