#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Row-operation kernels for exact elimination. Every kernel has a portable
// scalar reference; vector variants are compiled per ISA and picked at runtime.
// All variants must produce bit-identical results.

namespace pathreg::simd {

enum class Isa { scalar, avx2, neon };

struct Kernels {
  Isa isa;
  /// dst[i] ^= src[i] for i < words.
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  /// Index of the first nonzero word, or `words` if all are zero.
  std::size_t (*first_nonzero)(const std::uint64_t* row, std::size_t words);
  /// dst[i] = (dst[i] + factor * src[i]) mod p. Requires p prime < 2^31 and
  /// every operand already reduced below p.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                   std::size_t len);
};

std::string_view name(Isa isa);

/// Kernel table for `isa`, or nullptr when it was not compiled in or the CPU
/// lacks the instructions.
const Kernels* kernels_for(Isa isa);

/// Every ISA usable on this machine, scalar first.
std::vector<Isa> available();

/// The table used by default: the environment variable PATHREG_SIMD
/// ("scalar", "avx2", "neon") when set and usable, else the widest available.
const Kernels& active();

namespace detail {
extern const Kernels kScalar;
#if defined(PATHREG_HAVE_AVX2)
extern const Kernels kAvx2;
#endif
#if defined(PATHREG_HAVE_NEON)
extern const Kernels kNeon;
#endif
}  // namespace detail

}  // namespace pathreg::simd
