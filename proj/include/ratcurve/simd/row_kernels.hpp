#pragma once

// Modular row kernels used by the F_p elimination loops.
//
// All kernels expect residues already reduced into [0, p). The scalar variant
// handles any modulus below 2^62; the AVX2 variant is only selected when the
// modulus fits in 32 bits (products are formed with 32x32->64 lane multiplies).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ratcurve::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set the running CPU supports (and this build compiled).
Isa detected_isa();

/// Instruction set the dispatcher currently routes to. Defaults to
/// detected_isa(); tests pin it to compare variants.
Isa active_isa();
void set_active_isa(Isa isa);

/// dst[i] = (dst[i] - a * src[i]) mod p
void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p);

/// v[i] = (a * v[i]) mod p
void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p);

namespace scalar {
void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p);
void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p);
}  // namespace scalar

namespace avx2 {
bool compiled();
void submul_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                std::uint64_t a, std::uint64_t p);
void scale_mod(std::uint64_t* v, std::size_t n, std::uint64_t a,
               std::uint64_t p);
}  // namespace avx2

}  // namespace ratcurve::simd
