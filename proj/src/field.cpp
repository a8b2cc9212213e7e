#include "ratcurve/field.hpp"

#include <array>

#include "ratcurve/error.hpp"

namespace ratcurve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotMPrimary: return "NotMPrimary";
    case ErrorCode::InvalidParameterization: return "InvalidParameterization";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::SlopeNotStabilized: return "SlopeNotStabilized";
    case ErrorCode::ResamplingExhausted: return "ResamplingExhausted";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kSmall = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (auto q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 2^64.
  for (auto a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < kMinPrime || p >= kMaxPrime) {
    throw Error(ErrorCode::InvalidField,
                "prime modulus must lie in [2^20, 2^62), got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  }
}

std::string PrimeField::name() const { return "prime " + std::to_string(p_); }

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return static_cast<Element>(v) % p_;
  const auto m = static_cast<Element>(-(v + 1)) % p_;  // avoids overflow at INT64_MIN
  return p_ - 1 - m;
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % mpz_class(std::to_string(p_));
  if (sgn(r) < 0) r += mpz_class(std::to_string(p_));
  return static_cast<Element>(std::stoull(r.get_str()));
}

PrimeField::Element PrimeField::from_mpq(const mpq_class& v) const {
  const Element den = from_mpz(v.get_den());
  if (den == 0) {
    throw Error(ErrorCode::Parse, "denominator " + v.get_den().get_str() +
                                      " vanishes modulo " + std::to_string(p_));
  }
  return mul(from_mpz(v.get_num()), inv(den));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::InternalInvariantViolation, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::uint64_t q = r / new_r;
    const std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    const std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  return t < 0 ? static_cast<Element>(t + static_cast<std::int64_t>(p_))
               : static_cast<Element>(t);
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::InternalInvariantViolation, "inverse of zero");
  return 1 / a;
}

std::string FieldConfig::describe() const {
  if (is_prime_mode()) return "prime " + std::to_string(prime());
  return "rational";
}

}  // namespace ratcurve
