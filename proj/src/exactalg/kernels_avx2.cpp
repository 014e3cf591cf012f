#include "invtheory/exactalg/kernels.hpp"

#if INVTHEORY_X86

#include <immintrin.h>

namespace invtheory::kernels {

namespace {

// x in [0, 2^23): returns x mod p. The float quotient is off by at most one,
// corrected with two conditional adjustments.
__attribute__((target("avx2"))) inline __m256i reduce_small(__m256i x, __m256 inv_p, __m256i p) {
  __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), p));
  __m256i negative = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(negative, p));
  __m256i too_big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(too_big, p));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod_avx2(std::span<std::uint32_t> dst,
                                                   std::span<const std::uint32_t> src, std::uint32_t factor,
                                                   std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce_small(x, inv_p, vp));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + factor * src[i]) % p;
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::span<std::uint32_t> row, std::uint32_t factor,
                                                    std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t n = row.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    x = _mm256_mullo_epi32(x, vf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + i), reduce_small(x, inv_p, vp));
  }
  for (; i < n; ++i) row[i] = factor * row[i] % p;
}

}  // namespace invtheory::kernels

#endif
