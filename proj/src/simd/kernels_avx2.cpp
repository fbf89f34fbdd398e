// Compiled with -mavx2; only reached after a CPUID check.

#include <immintrin.h>

#include "motzeta/simd/kernels.hpp"

namespace motzeta::simd {

namespace {

struct Avx2Modulus {
  __m256i mod;
  __m256i mu;
  __m256i hi_mask;

  explicit Avx2Modulus(const Modulus& m)
      : mod(_mm256_set1_epi32(static_cast<int>(m.value))),
        mu(_mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(m.barrett)))),
        hi_mask(_mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ULL))) {}

  // Barrett reduction of eight lanes, each < 2^31.
  __m256i reduce(__m256i v) const {
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(v, mu), 32);
    const __m256i odd = _mm256_and_si256(_mm256_mul_epu32(_mm256_srli_epi64(v, 32), mu), hi_mask);
    const __m256i q = _mm256_or_si256(even, odd);
    const __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, mod));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, mod));
  }
};

inline __m256i load(const std::uint32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint32_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void mul_add_avx2(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y,
                  std::size_t n, const Modulus& m) {
  const Avx2Modulus vm(m);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i prod = _mm256_mullo_epi32(load(x + i), load(y + i));
    store(acc + i, vm.reduce(_mm256_add_epi32(load(acc + i), prod)));
  }
  for (; i < n; ++i) acc[i] = m.reduce(acc[i] + x[i] * y[i]);
}

void scale_add_avx2(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                    const Modulus& m) {
  const Avx2Modulus vm(m);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i prod = _mm256_mullo_epi32(load(x + i), vc);
    store(acc + i, vm.reduce(_mm256_add_epi32(load(acc + i), prod)));
  }
  for (; i < n; ++i) acc[i] = m.reduce(acc[i] + c * x[i]);
}

void mul_avx2(std::uint32_t* out, const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
              const Modulus& m) {
  const Avx2Modulus vm(m);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(out + i, vm.reduce(_mm256_mullo_epi32(load(x + i), load(y + i))));
  for (; i < n; ++i) out[i] = m.reduce(x[i] * y[i]);
}

std::size_t count_equal_avx2(const std::uint32_t* x, std::uint32_t value, std::size_t n) {
  const __m256i target = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load(x + i), target);
    count += static_cast<std::size_t>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
  }
  for (; i < n; ++i) count += x[i] == value ? 1 : 0;
  return count;
}

const KernelTable kAvx2{Backend::avx2, "avx2", mul_add_avx2, scale_add_avx2, mul_avx2,
                        count_equal_avx2};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace motzeta::simd
