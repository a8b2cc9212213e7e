#include <atomic>

#include "ratcurve/simd/row_kernels.hpp"

namespace ratcurve::simd {

#ifndef RATCURVE_BUILD_AVX2
namespace avx2 {
bool compiled() { return false; }
void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p) {
  scalar::submul_mod(dst, src, n, a, p);
}
void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p) {
  scalar::scale_mod(v, n, a, p);
}
}  // namespace avx2
#endif

namespace {

constexpr std::uint64_t kAvx2ModulusLimit = std::uint64_t{1} << 32;

Isa probe() {
#if defined(RATCURVE_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Avx2:
      return "avx2";
    case Isa::Scalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p) {
  if (p < kAvx2ModulusLimit && active_isa() == Isa::Avx2) {
    avx2::submul_mod(dst, src, n, a, p);
  } else {
    scalar::submul_mod(dst, src, n, a, p);
  }
}

void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p) {
  if (p < kAvx2ModulusLimit && active_isa() == Isa::Avx2) {
    avx2::scale_mod(v, n, a, p);
  } else {
    scalar::scale_mod(v, n, a, p);
  }
}

}  // namespace ratcurve::simd
