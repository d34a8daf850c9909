#include <cstdlib>
#include <string>

#include "pathreg/simd/kernels.hpp"

namespace pathreg::simd {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

const Kernels* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::kScalar;
    case Isa::avx2:
#if defined(PATHREG_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &detail::kAvx2;
#endif
      return nullptr;
    case Isa::neon:
#if defined(PATHREG_HAVE_NEON)
      return &detail::kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (kernels_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

namespace {

const Kernels& select() {
  if (const char* env = std::getenv("PATHREG_SIMD")) {
    const std::string want(env);
    for (Isa isa : available()) {
      if (name(isa) == want) return *kernels_for(isa);
    }
  }
  return *kernels_for(available().back());
}

}  // namespace

const Kernels& active() {
  static const Kernels& chosen = select();
  return chosen;
}

}  // namespace pathreg::simd
