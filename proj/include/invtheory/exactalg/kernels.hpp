#pragma once

// Row kernels for GF(p) elimination. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant; `axpy_mod`/`scale_mod`
// dispatch at runtime. Residues are always in [0, p).

#include <cstdint>
#include <span>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define INVTHEORY_X86 1
#else
#define INVTHEORY_X86 0
#endif

namespace invtheory::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

bool cpu_has_avx2();

// The AVX2 path reduces through single-precision floats, which is exact for
// dst + factor * src < 2^23.
inline constexpr std::uint32_t kAvx2MaxModulus = 2048;

void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                     std::uint32_t p);
void scale_mod_scalar(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);

#if INVTHEORY_X86
void axpy_mod_avx2(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                   std::uint32_t p);
void scale_mod_avx2(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);
#endif

/// Best ISA supported by the running CPU.
Isa detected_isa();
Isa active_isa();
/// Forces the dispatch target (tests and benchmarks). Requesting avx2 on a
/// CPU without it throws.
void set_active_isa(Isa isa);

/// dst[i] <- dst[i] + factor * src[i] (mod p)
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
/// row[i] <- factor * row[i] (mod p)
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);

}  // namespace invtheory::kernels
