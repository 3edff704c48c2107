#include <arm_neon.h>

#include "socle/simd_kernels.hpp"

namespace socle::simd {

namespace {

uint8x16_t product_table(std::uint8_t coef, std::uint8_t p) {
  std::uint8_t lut[16] = {};
  for (int k = 0; k < 16; ++k) lut[k] = static_cast<std::uint8_t>((coef * k) % p);
  return vld1q_u8(lut);
}

void axpy_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const uint8x16_t lut = product_table(coef, p);
  const uint8x16_t pv = vdupq_n_u8(p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t sum = vaddq_u8(vld1q_u8(dst + i), vqtbl1q_u8(lut, vld1q_u8(src + i)));
    sum = vminq_u8(sum, vsubq_u8(sum, pv));
    vst1q_u8(dst + i, sum);
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + coef * src[i]) % p);
}

void scale_neon(std::uint8_t* dst, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  const uint8x16_t lut = product_table(coef, p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vqtbl1q_u8(lut, vld1q_u8(dst + i)));
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((coef * dst[i]) % p);
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{Isa::neon, "neon", axpy_neon, scale_neon};
  return &k;
}

}  // namespace socle::simd
