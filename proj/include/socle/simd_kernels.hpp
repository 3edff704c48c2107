#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Row kernels for arithmetic mod a small prime p (p <= 13, so every residue
// fits a 16-entry shuffle table). Rows are byte arrays holding residues.
namespace socle::simd {

enum class Isa { scalar, avx2, neon };

// dst[i] = (dst[i] + coef * src[i]) mod p
using AxpyFn = void (*)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t coef, std::uint8_t p,
                        std::size_t n);
// dst[i] = coef * dst[i] mod p
using ScaleFn = void (*)(std::uint8_t* dst, std::uint8_t coef, std::uint8_t p, std::size_t n);

struct Kernels {
  Isa isa;
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

// Largest prime the kernels accept.
inline constexpr int max_prime = 13;

const Kernels& scalar_kernels();
// nullptr when not compiled in or not supported by the running CPU.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

std::vector<const Kernels*> available();

// Kernels used by the linear algebra. Picks the best available variant on
// first use; SOCLE_SIMD=scalar|avx2|neon in the environment overrides.
const Kernels& active();
// Returns false when the requested variant is unavailable.
bool select(Isa isa);
bool select(std::string_view name);

}  // namespace socle::simd
