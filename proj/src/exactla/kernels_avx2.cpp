#include <immintrin.h>

#include "phantomkit/kernels.hpp"

namespace phantomkit::simd::avx2 {

namespace {

// x in [0, p^2) as signed 32-bit lanes. The float quotient is off by at most one,
// fixed by a single conditional add/subtract of p.
inline __m256i reduce_lanes(__m256i x, __m256i vp, __m256i vp_minus_1, __m256 inv_p) {
  __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i big = _mm256_cmpgt_epi32(r, vp_minus_1);
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vp1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_lanes(x, vp, vp1, inv_p));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vp1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_mullo_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)), vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), reduce_lanes(x, vp, vp1, inv_p));
  }
  for (; i < n; ++i) v[i] = (c * v[i]) % p;
}

}  // namespace phantomkit::simd::avx2
