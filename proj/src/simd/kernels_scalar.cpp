#include "pathreg/simd/kernels.hpp"

namespace pathreg::simd {
namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t first_nonzero(const std::uint64_t* row, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (row[i] != 0) return i;
  }
  return words;
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
              std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % p);
  }
}

}  // namespace

namespace detail {
const Kernels kScalar{Isa::scalar, &xor_words, &first_nonzero, &axpy_mod};
}

}  // namespace pathreg::simd
