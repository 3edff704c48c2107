#include <immintrin.h>

#include "socle/simd_kernels.hpp"

namespace socle::simd {

namespace {

__m256i product_table(std::uint8_t coef, std::uint8_t p) {
  alignas(16) std::uint8_t lut[16] = {};
  for (int k = 0; k < 16; ++k) lut[k] = static_cast<std::uint8_t>((coef * k) % p);
  return _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(lut)));
}

void axpy_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const __m256i lut = product_table(coef, p);
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i sum = _mm256_add_epi8(d, _mm256_shuffle_epi8(lut, s));
    // sum < 2p; sum - p wraps to a large byte exactly when sum < p
    sum = _mm256_min_epu8(sum, _mm256_sub_epi8(sum, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), sum);
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + coef * src[i]) % p);
}

void scale_avx2(std::uint8_t* dst, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const __m256i lut = product_table(coef, p);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(lut, d));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((coef * dst[i]) % p);
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{Isa::avx2, "avx2", axpy_avx2, scale_avx2};
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &k : nullptr;
}

}  // namespace socle::simd
