#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratcurve/error.hpp"
#include "ratcurve/field.hpp"
#include "ratcurve/matrix.hpp"

namespace ratcurve {

/// Homogeneous form in k[x,y], dense: coeffs()[i] multiplies x^(deg-i) y^i.
/// The zero form carries no degree.
template <class F>
class BinaryForm {
 public:
  using Element = typename F::Element;

  static BinaryForm zero(const F& field) { return BinaryForm(field); }

  /// All-zero coefficient vectors produce the zero form.
  static BinaryForm from_coeffs(const F& field, std::vector<Element> coeffs) {
    if (coeffs.empty()) throw Error(ErrorCode::Usage, "a nonzero form needs degree+1 coefficients");
    BinaryForm h(field);
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                      [&](const Element& c) { return field.is_zero(c); });
    if (all_zero) return h;
    h.zero_ = false;
    h.coeffs_ = std::move(coeffs);
    return h;
  }

  static BinaryForm constant(const F& field, const Element& c) {
    return from_coeffs(field, {c});
  }

  /// c * x^a * y^b
  static BinaryForm monomial(const F& field, int x_exp, int y_exp, const Element& c) {
    std::vector<Element> coeffs(static_cast<std::size_t>(x_exp + y_exp) + 1, field.zero());
    coeffs[static_cast<std::size_t>(y_exp)] = c;
    return from_coeffs(field, std::move(coeffs));
  }

  static BinaryForm monomial(const F& field, int x_exp, int y_exp) {
    return monomial(field, x_exp, y_exp, field.one());
  }

  const F& field() const { return field_; }
  bool is_zero() const { return zero_; }

  int degree() const {
    if (zero_) throw Error(ErrorCode::Usage, "the zero form has no degree");
    return static_cast<int>(coeffs_.size()) - 1;
  }

  const std::vector<Element>& coeffs() const { return coeffs_; }

  /// Coefficient of x^(deg-i) y^i.
  const Element& coeff(std::size_t i) const { return coeffs_.at(i); }

  /// Dense coefficients viewed as an element of R_n; zero form gives zeros.
  std::vector<Element> coeff_vector(int n) const {
    if (zero_) return std::vector<Element>(static_cast<std::size_t>(n) + 1, field_.zero());
    if (degree() != n) throw Error(ErrorCode::DegreeMismatch, "form is not of the requested degree");
    return coeffs_;
  }

  bool is_constant() const { return !zero_ && coeffs_.size() == 1; }

  bool is_monomial() const {
    if (zero_) return false;
    return std::count_if(coeffs_.begin(), coeffs_.end(),
                         [&](const Element& c) { return !field_.is_zero(c); }) == 1;
  }

  /// First nonzero coefficient in storage order (highest power of x).
  const Element& leading() const {
    for (const auto& c : coeffs_) {
      if (!field_.is_zero(c)) return c;
    }
    throw Error(ErrorCode::Usage, "the zero form has no leading coefficient");
  }

  /// Index of the leading coefficient, i.e. the exponent of y dividing h.
  std::size_t leading_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!field_.is_zero(coeffs_[i])) return i;
    }
    throw Error(ErrorCode::Usage, "the zero form has no leading coefficient");
  }

  BinaryForm scaled(const Element& c) const {
    if (zero_ || field_.is_zero(c)) return zero(field_);
    BinaryForm out = *this;
    field_.scale(out.coeffs_, c);
    return out;
  }

  /// Scaled so that the leading coefficient is one.
  BinaryForm monic() const {
    if (zero_) return *this;
    const auto& lead = leading();
    if (field_.is_one(lead)) return *this;
    return scaled(field_.inv(lead));
  }

  BinaryForm operator-() const { return scaled(field_.neg(field_.one())); }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    if (a.degree() != b.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "cannot add forms of degrees " +
                                                 std::to_string(a.degree()) + " and " +
                                                 std::to_string(b.degree()));
    }
    std::vector<Element> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeffs_[i], b.coeffs_[i]);
    return from_coeffs(a.field_, std::move(c));
  }

  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.zero_ || b.zero_) return zero(a.field_);
    const F& f = a.field_;
    std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return from_coeffs(f, std::move(c));
  }

  BinaryForm pow(int t) const {
    BinaryForm out = constant(field_, field_.one());
    for (int i = 0; i < t; ++i) out = out * *this;
    return out;
  }

  /// h(u, v) by Horner in both variables.
  Element eval(const Element& u, const Element& v) const {
    if (zero_) return field_.zero();
    const F& f = field_;
    // sum c_i u^(d-i) v^i: accumulate acc = acc*u ... with v powers tracked.
    Element acc = f.zero();
    Element vpow = f.one();
    std::vector<Element> vpows(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      vpows[i] = vpow;
      vpow = f.mul(vpow, v);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      acc = f.add(f.mul(acc, u), f.mul(coeffs_[i], vpows[i]));
    }
    return acc;
  }

  /// Lexicographic comparison of (degree, coefficients); zero sorts first.
  friend int compare(const BinaryForm& a, const BinaryForm& b) {
    if (a.zero_ || b.zero_) return static_cast<int>(!a.zero_) - static_cast<int>(!b.zero_);
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const int c = a.field_.compare(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return compare(a, b) == 0; }

  /// True when a = c*b for some nonzero scalar c.
  friend bool proportional(const BinaryForm& a, const BinaryForm& b) {
    return a.monic() == b.monic();
  }

 private:
  explicit BinaryForm(const F& field) : field_(field) {}

  F field_;
  bool zero_ = true;
  std::vector<Element> coeffs_;
};

/// Point of P^1, stored with its first nonzero coordinate equal to one.
template <class F>
class ProjPoint1 {
 public:
  using Element = typename F::Element;

  ProjPoint1(const F& field, Element u, Element v) : u_(std::move(u)), v_(std::move(v)) {
    if (!field.is_zero(u_)) {
      const auto inv = field.inv(u_);
      v_ = field.mul(v_, inv);
      u_ = field.one();
    } else if (!field.is_zero(v_)) {
      v_ = field.one();
    } else {
      throw Error(ErrorCode::Usage, "[0:0] is not a point of P^1");
    }
  }

  static ProjPoint1 random(const F& field, Rng& rng) {
    for (;;) {
      auto u = field.random(rng);
      auto v = field.random(rng);
      if (!field.is_zero(u) || !field.is_zero(v)) return ProjPoint1(field, u, v);
    }
  }

  const Element& u() const { return u_; }
  const Element& v() const { return v_; }

 private:
  Element u_;
  Element v_;
};

/// Point of P^(n-1), stored with its first nonzero coordinate equal to one.
template <class F>
class ProjPointN {
 public:
  using Element = typename F::Element;

  ProjPointN(const F& field, std::vector<Element> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(),
                           [&](const Element& c) { return !field.is_zero(c); });
    if (it == coords_.end()) throw Error(ErrorCode::Usage, "the zero vector is not a projective point");
    const auto inv = field.inv(*it);
    for (auto& c : coords_) c = field.mul(c, inv);
  }

  static ProjPointN random(const F& field, std::size_t n, Rng& rng) {
    for (;;) {
      std::vector<Element> c;
      c.reserve(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        c.push_back(field.random(rng));
        nonzero = nonzero || !field.is_zero(c.back());
      }
      if (nonzero) return ProjPointN(field, std::move(c));
    }
  }

  std::size_t size() const { return coords_.size(); }
  const std::vector<Element>& coords() const { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPointN& a, const ProjPointN& b) = default;

 private:
  std::vector<Element> coords_;
};

template <class F>
typename F::Element eval(const BinaryForm<F>& h, const ProjPoint1<F>& q) {
  return h.eval(q.u(), q.v());
}

namespace detail {

// Univariate polynomials, ascending coefficients, no trailing zeros.
template <class F>
std::vector<typename F::Element> trim(const F& f, std::vector<typename F::Element> a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
  return a;
}

template <class F>
std::vector<typename F::Element> poly_rem(const F& f, std::vector<typename F::Element> a,
                                          const std::vector<typename F::Element>& b) {
  const auto lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const auto q = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    }
    a = trim(f, std::move(a));
  }
  return a;
}

template <class F>
std::vector<typename F::Element> poly_gcd(const F& f, std::vector<typename F::Element> a,
                                          std::vector<typename F::Element> b) {
  a = trim(f, std::move(a));
  b = trim(f, std::move(b));
  while (!b.empty()) {
    auto r = poly_rem(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Monic gcd of the nonzero inputs. In k[x,y] it generates the saturation of
/// the ideal the inputs generate with respect to (x,y).
template <class F>
BinaryForm<F> gcd_forms(std::span<const BinaryForm<F>> hs) {
  const BinaryForm<F>* first = nullptr;
  for (const auto& h : hs) {
    if (!h.is_zero()) {
      first = &h;
      break;
    }
  }
  if (first == nullptr) throw Error(ErrorCode::ZeroIdeal, "gcd of the zero ideal");
  const F& f = first->field();

  // h = y^v * H(x,y) with H(x,1) of degree deg h - v. Dehomogenising at y = 1
  // keeps every linear factor except y itself, whose power is tracked apart.
  std::size_t y_power = static_cast<std::size_t>(-1);
  std::vector<typename F::Element> g;
  bool have_g = false;
  for (const auto& h : hs) {
    if (h.is_zero()) continue;
    const std::size_t v = h.leading_index();
    y_power = std::min(y_power, v);
    // H(x,1) = sum_{i >= v} c_i x^(d-i), ascending in x.
    const auto& c = h.coeffs();
    std::vector<typename F::Element> uni(c.size() - v);
    for (std::size_t i = v; i < c.size(); ++i) uni[c.size() - 1 - i] = c[i];
    if (!have_g) {
      g = detail::trim(f, std::move(uni));
      have_g = true;
    } else {
      g = detail::poly_gcd(f, std::move(g), std::move(uni));
    }
  }
  // Rehomogenise: g(x) of degree m becomes y^v * sum g_k x^k y^(m-k).
  const std::size_t m = g.size() - 1;
  std::vector<typename F::Element> coeffs(m + 1 + y_power, f.zero());
  for (std::size_t k = 0; k <= m; ++k) coeffs[m - k + y_power] = g[k];
  return BinaryForm<F>::from_coeffs(f, std::move(coeffs)).monic();
}

template <class F>
BinaryForm<F> gcd_forms(std::initializer_list<BinaryForm<F>> hs) {
  std::vector<BinaryForm<F>> v(hs);
  return gcd_forms(std::span<const BinaryForm<F>>(v));
}

template <class F>
BinaryForm<F> gcd_forms(const std::vector<BinaryForm<F>>& hs) {
  return gcd_forms(std::span<const BinaryForm<F>>(hs));
}

/// Dimension of the k-span of forms of a common degree.
template <class F>
std::size_t li_dim(std::span<const BinaryForm<F>> hs, int common_degree) {
  if (hs.empty()) return 0;
  const F& f = hs.front().field();
  Matrix<F> m(f, hs.size(), static_cast<std::size_t>(common_degree) + 1);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].is_zero()) continue;
    if (hs[i].degree() != common_degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "form of degree " + std::to_string(hs[i].degree()) +
                      " where degree " + std::to_string(common_degree) + " was expected");
    }
    for (std::size_t j = 0; j < hs[i].coeffs().size(); ++j) m(i, j) = hs[i].coeffs()[j];
  }
  return rank(m);
}

template <class F>
std::size_t li_dim(const std::vector<BinaryForm<F>>& hs, int common_degree) {
  return li_dim(std::span<const BinaryForm<F>>(hs), common_degree);
}

}  // namespace ratcurve
