#include <arm_neon.h>

#include "pathreg/simd/kernels.hpp"

namespace pathreg::simd {
namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t first_nonzero(const std::uint64_t* row, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vld1q_u64(row + i);
    if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) break;
  }
  for (; i < words; ++i) {
    if (row[i] != 0) return i;
  }
  return words;
}

}  // namespace

namespace detail {
// No vector modular kernel on NEON yet; the scalar reference is reused.
const Kernels kNeon{Isa::neon, &xor_words, &first_nonzero, kScalar.axpy_mod};
}

}  // namespace pathreg::simd
