#pragma once

// Row kernels for arithmetic mod p. Every elimination step in the linear algebra
// layer goes through these, so they come in a scalar reference flavour and
// vectorized flavours picked at runtime from the CPU feature set.
//
// Contract for all variants: inputs are residues in [0, p), p <= 46337, and the
// outputs are bit-identical across backends.

#include <cstdint>
#include <span>
#include <string_view>

namespace phantomkit::simd {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
/// v[i] = (c * v[i]) mod p
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

Backend active_backend();
bool backend_available(Backend b);
/// Forces a backend (tests and benchmarks). Throws if unavailable on this CPU.
void set_backend(Backend b);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

#if defined(PHANTOMKIT_HAVE_AVX2)
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace phantomkit::simd
