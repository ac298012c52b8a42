#include "phantomkit/kernels.hpp"

namespace phantomkit::simd::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) v[i] = (c * v[i]) % p;
}

}  // namespace phantomkit::simd::scalar
