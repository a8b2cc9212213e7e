#include "ratcurve/simd/row_kernels.hpp"

namespace ratcurve::simd::scalar {

namespace {

using u128 = unsigned __int128;

// Shoup precomputation: floor(a * 2^64 / p). With s < p < 2^63 the quotient
// estimate hi64(a' * s) is off by at most one, so a*s - q*p lands in [0, 2p).
inline std::uint64_t shoup_factor(std::uint64_t a, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) << 64) / p);
}

inline std::uint64_t shoup_mul(std::uint64_t s, std::uint64_t a,
                               std::uint64_t a_shoup, std::uint64_t p) {
  const auto q =
      static_cast<std::uint64_t>((static_cast<u128>(a_shoup) * s) >> 64);
  std::uint64_t r = a * s - q * p;
  if (r >= p) r -= p;
  return r;
}

}  // namespace

void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p) {
  if (a == 0) return;
  const std::uint64_t a_shoup = shoup_factor(a, p);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = shoup_mul(src[i], a, a_shoup, p);
    const std::uint64_t d = dst[i];
    dst[i] = d >= r ? d - r : d + (p - r);
  }
}

void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p) {
  const std::uint64_t a_shoup = shoup_factor(a, p);
  for (std::size_t i = 0; i < n; ++i) v[i] = shoup_mul(v[i], a, a_shoup, p);
}

}  // namespace ratcurve::simd::scalar
