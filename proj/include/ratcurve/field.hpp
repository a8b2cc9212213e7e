#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "ratcurve/simd/row_kernels.hpp"

namespace ratcurve {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kMinPrime = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 62;

/// splitmix64-seeded xoshiro256**. Fully specified so a seed reproduces the
/// same sampled points on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t s_[4];
};

class PrimeField {
 public:
  using Element = std::uint64_t;

  /// Throws Error(InvalidField) unless p is a prime in [2^20, 2^62).
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }
  std::string name() const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;
  Element from_mpz(const mpz_class& v) const;
  Element from_mpq(const mpq_class& v) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  /// Total order used for deterministic tie-breaking (residue order).
  int compare(Element a, Element b) const { return a < b ? -1 : (a > b ? 1 : 0); }

  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element inv(Element a) const;

  Element random(Rng& rng) const { return rng.below(p_); }

  /// Symmetric representative in (-p/2, p/2].
  std::string to_string(Element a) const;

  void submul(std::span<Element> dst, std::span<const Element> src,
              Element a) const {
    simd::submul_mod(dst.data(), src.data(), dst.size(), a, p_);
  }
  void scale(std::span<Element> v, Element a) const {
    simd::scale_mod(v.data(), v.size(), a, p_);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  /// Half-width of the integer box random points are drawn from.
  static constexpr std::int64_t kSampleRadius = 1 << 16;

  std::string name() const { return "rational"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  Element from_mpz(const mpz_class& v) const { return mpq_class(v); }
  Element from_mpq(const mpq_class& v) const {
    mpq_class r(v);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  int compare(const Element& a, const Element& b) const { return cmp(a, b); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  Element random(Rng& rng) const {
    return from_int(rng.between(-kSampleRadius, kSampleRadius));
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  void submul(std::span<Element> dst, std::span<const Element> src,
              const Element& a) const {
    if (is_zero(a)) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (sgn(src[i]) != 0) dst[i] -= a * src[i];
    }
  }
  void scale(std::span<Element> v, const Element& a) const {
    for (auto& x : v) x *= a;
  }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Runtime choice of coefficient field plus the sampling seed.
struct FieldConfig {
  struct Prime {
    std::uint64_t p = kDefaultPrime;
  };
  struct Rational {};

  std::variant<Prime, Rational> mode = Prime{};
  std::uint64_t seed = 1;

  bool is_prime_mode() const { return std::holds_alternative<Prime>(mode); }
  std::uint64_t prime() const { return std::get<Prime>(mode).p; }
  std::string describe() const;
};

}  // namespace ratcurve
