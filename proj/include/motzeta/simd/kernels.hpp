#pragma once

// Lane-parallel modular arithmetic on uint32 arrays. Every routine exists as
// a portable scalar reference and, on x86-64, an AVX2 variant; the variant is
// chosen once at runtime from CPUID.
//
// All inputs must already be reduced (< modulus) and the modulus must not
// exceed kMaxModulus so that acc + x*y stays below 2^31.

#include <cstddef>
#include <cstdint>
#include <span>

namespace motzeta::simd {

inline constexpr std::uint32_t kMaxModulus = 1U << 15;

/// Modulus with a precomputed Barrett constant floor(2^32 / m).
struct Modulus {
  std::uint32_t value;
  std::uint64_t barrett;

  explicit Modulus(std::uint32_t m);

  /// v mod m for v < 2^31.
  std::uint32_t reduce(std::uint32_t v) const {
    const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * barrett) >> 32);
    std::uint32_t r = v - q * value;
    return r >= value ? r - value : r;
  }
};

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  const char* name;
  /// acc[i] = (acc[i] + x[i] * y[i]) mod m
  void (*mul_add)(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y,
                  std::size_t n, const Modulus& m);
  /// acc[i] = (acc[i] + c * x[i]) mod m
  void (*scale_add)(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                    const Modulus& m);
  /// out[i] = x[i] * y[i] mod m
  void (*mul)(std::uint32_t* out, const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
              const Modulus& m);
  /// #{i : x[i] == value}
  std::size_t (*count_equal)(const std::uint32_t* x, std::uint32_t value, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();
bool cpu_supports_avx2();

/// AVX2 when compiled in and supported by the CPU, scalar otherwise.
/// MOTZETA_SIMD=scalar in the environment forces the scalar table.
const KernelTable& active_kernels();

inline void mul_add(const KernelTable& k, std::span<std::uint32_t> acc,
                    std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                    const Modulus& m) {
  k.mul_add(acc.data(), x.data(), y.data(), acc.size(), m);
}

inline void scale_add(const KernelTable& k, std::span<std::uint32_t> acc,
                      std::span<const std::uint32_t> x, std::uint32_t c, const Modulus& m) {
  k.scale_add(acc.data(), x.data(), c, acc.size(), m);
}

}  // namespace motzeta::simd
