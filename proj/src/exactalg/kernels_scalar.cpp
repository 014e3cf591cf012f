#include <atomic>

#include "invtheory/errors.hpp"
#include "invtheory/exactalg/kernels.hpp"

namespace invtheory::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                     std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

void scale_mod_scalar(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (auto& x : row) x = static_cast<std::uint32_t>(f * x % p);
}

bool cpu_has_avx2() {
#if INVTHEORY_X86 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return isa;
}

namespace {
std::atomic<Isa>& isa_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}
}  // namespace

Isa active_isa() { return isa_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) fail(ErrorKind::invalid_argument, "CPU does not support AVX2");
  isa_slot().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
  if (factor == 0) return;
#if INVTHEORY_X86
  if (p < kAvx2MaxModulus && active_isa() == Isa::avx2) {
    axpy_mod_avx2(dst, src, factor, p);
    return;
  }
#endif
  axpy_mod_scalar(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p) {
  if (factor == 1) return;
#if INVTHEORY_X86
  if (p < kAvx2MaxModulus && active_isa() == Isa::avx2) {
    scale_mod_avx2(row, factor, p);
    return;
  }
#endif
  scale_mod_scalar(row, factor, p);
}

}  // namespace invtheory::kernels
