#include <cstdlib>
#include <string>

#include "socle/simd_kernels.hpp"

namespace socle::simd {

#ifndef SOCLE_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif
#ifndef SOCLE_HAVE_NEON
const Kernels* neon_kernels() { return nullptr; }
#endif

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&scalar_kernels()};
  if (auto* k = avx2_kernels()) out.push_back(k);
  if (auto* k = neon_kernels()) out.push_back(k);
  return out;
}

namespace {

const Kernels* find(std::string_view name) {
  for (auto* k : available())
    if (name == k->name) return k;
  return nullptr;
}

const Kernels*& current() {
  static const Kernels* chosen = [] {
    if (const char* env = std::getenv("SOCLE_SIMD"))
      if (auto* k = find(env)) return k;
    return available().back();
  }();
  return chosen;
}

}  // namespace

const Kernels& active() { return *current(); }

bool select(Isa isa) {
  for (auto* k : available())
    if (k->isa == isa) {
      current() = k;
      return true;
    }
  return false;
}

bool select(std::string_view name) {
  if (auto* k = find(name)) {
    current() = k;
    return true;
  }
  return false;
}

}  // namespace socle::simd
