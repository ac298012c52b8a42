#include "phantomkit/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "phantomkit/error.hpp"

namespace phantomkit::simd {

namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t,
                        std::uint32_t);
using ScaleFn = void (*)(std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

struct Table {
  Backend backend;
  AxpyFn axpy;
  ScaleFn scale;
};

constexpr Table kScalar{Backend::Scalar, &scalar::axpy_mod, &scalar::scale_mod};
#if defined(PHANTOMKIT_HAVE_AVX2)
constexpr Table kAvx2{Backend::Avx2, &avx2::axpy_mod, &avx2::scale_mod};
#endif

bool cpu_has_avx2() {
#if defined(PHANTOMKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table* pick_default() {
  // PHANTOMKIT_SIMD=scalar pins the reference kernels.
  if (const char* env = std::getenv("PHANTOMKIT_SIMD"); env && std::string(env) == "scalar")
    return &kScalar;
#if defined(PHANTOMKIT_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{pick_default()};
  return table;
}

}  // namespace

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
  if (c == 0) return;
  current().load(std::memory_order_relaxed)->axpy(dst.data(), src.data(), dst.size(), c, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  if (c == 1) return;
  current().load(std::memory_order_relaxed)->scale(v.data(), v.size(), c, p);
}

Backend active_backend() { return current().load()->backend; }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return cpu_has_avx2();
  }
  return false;
}

void set_backend(Backend b) {
  if (!backend_available(b))
    throw Error(ErrorKind::ConfigError, std::string("backend unavailable: ") +
                                            std::string(to_string(b)));
  switch (b) {
    case Backend::Scalar: current().store(&kScalar); break;
    case Backend::Avx2:
#if defined(PHANTOMKIT_HAVE_AVX2)
      current().store(&kAvx2);
#endif
      break;
  }
}

}  // namespace phantomkit::simd
