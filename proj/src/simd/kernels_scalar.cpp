#include "motzeta/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace motzeta::simd {

Modulus::Modulus(std::uint32_t m) : value(m), barrett(0) {
  if (m < 2 || m > kMaxModulus) throw std::invalid_argument("modulus out of kernel range");
  barrett = (std::uint64_t{1} << 32) / m;
}

namespace {

void mul_add_scalar(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y,
                    std::size_t n, const Modulus& m) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = m.reduce(acc[i] + x[i] * y[i]);
}

void scale_add_scalar(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                      const Modulus& m) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = m.reduce(acc[i] + c * x[i]);
}

void mul_scalar(std::uint32_t* out, const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                const Modulus& m) {
  for (std::size_t i = 0; i < n; ++i) out[i] = m.reduce(x[i] * y[i]);
}

std::size_t count_equal_scalar(const std::uint32_t* x, std::uint32_t value, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += x[i] == value ? 1 : 0;
  return count;
}

const KernelTable kScalar{Backend::scalar, "scalar", mul_add_scalar, scale_add_scalar, mul_scalar,
                          count_equal_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

#if !defined(MOTZETA_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports_avx2() {
#if defined(MOTZETA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("MOTZETA_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return kScalar;
    if (const KernelTable* avx2 = avx2_kernels(); avx2 != nullptr && cpu_supports_avx2())
      return *avx2;
    return kScalar;
  }();
  return chosen;
}

}  // namespace motzeta::simd
