#include <immintrin.h>

#include "ratcurve/simd/row_kernels.hpp"

namespace ratcurve::simd::avx2 {

bool compiled() { return true; }

namespace {

// Residues live in the low 32 bits of each 64-bit lane, so _mm256_mul_epu32
// gives exact 64-bit products. The Shoup factor floor(a * 2^32 / p) fits in
// 32 bits for p < 2^32 and keeps a*s - q*p inside [0, 2p).
struct Shoup32 {
  __m256i a;
  __m256i a_shoup;
  __m256i p;
  __m256i p_minus_one;

  Shoup32(std::uint64_t a_, std::uint64_t p_)
      : a(_mm256_set1_epi64x(static_cast<long long>(a_))),
        a_shoup(_mm256_set1_epi64x(
            static_cast<long long>((a_ << 32) / p_))),
        p(_mm256_set1_epi64x(static_cast<long long>(p_))),
        p_minus_one(_mm256_set1_epi64x(static_cast<long long>(p_ - 1))) {}

  __m256i mul(__m256i s) const {
    const __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(s, a_shoup), 32);
    __m256i r = _mm256_sub_epi64(_mm256_mul_epu32(s, a), _mm256_mul_epu32(q, p));
    const __m256i ge = _mm256_cmpgt_epi64(r, p_minus_one);
    return _mm256_sub_epi64(r, _mm256_and_si256(ge, p));
  }
};

}  // namespace

void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p) {
  if (a == 0) return;
  const Shoup32 k(a, p);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i t = _mm256_sub_epi64(d, k.mul(s));
    const __m256i neg = _mm256_cmpgt_epi64(zero, t);
    t = _mm256_add_epi64(t, _mm256_and_si256(neg, k.p));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  if (i < n) scalar::submul_mod(dst + i, src + i, n - i, a, p);
}

void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p) {
  const Shoup32 k(a, p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<__m256i*>(v + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), k.mul(s));
  }
  if (i < n) scalar::scale_mod(v + i, n - i, a, p);
}

}  // namespace ratcurve::simd::avx2
