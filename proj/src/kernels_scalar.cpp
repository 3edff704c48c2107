#include "socle/simd_kernels.hpp"

namespace socle::simd {

namespace {

void axpy_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint8_t>((dst[i] + coef * src[i]) % p);
}

void scale_scalar(std::uint8_t* dst, std::uint8_t coef, std::uint8_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint8_t>((coef * dst[i]) % p);
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, "scalar", axpy_scalar, scale_scalar};
  return k;
}

}  // namespace socle::simd
