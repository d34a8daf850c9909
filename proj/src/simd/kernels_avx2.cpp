#include <immintrin.h>

#include "pathreg/simd/kernels.hpp"

namespace pathreg::simd {
namespace {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t first_nonzero(const std::uint64_t* row, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    if (!_mm256_testz_si256(v, v)) break;
  }
  for (; i < words; ++i) {
    if (row[i] != 0) return i;
  }
  return words;
}

// Below 2^15 every lane of dst + factor*src stays under 2^31, so the quotient
// can be estimated in double precision and corrected by one step either way.
constexpr std::uint32_t kVectorPrimeLimit = 1U << 15;

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
              std::size_t len) {
  std::size_t i = 0;
  if (p < kVectorPrimeLimit) {
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vp_minus1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    const __m256i zero = _mm256_setzero_si256();
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    for (; i + 8 <= len; i += 8) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
      const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
      const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
      const __m128i qlo = _mm256_cvttpd_epi32(_mm256_mul_pd(lo, inv));
      const __m128i qhi = _mm256_cvttpd_epi32(_mm256_mul_pd(hi, inv));
      const __m256i q = _mm256_set_m128i(qhi, qlo);
      __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
      r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
      r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vp_minus1), vp));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
  }
  for (; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % p);
  }
}

}  // namespace

namespace detail {
const Kernels kAvx2{Isa::avx2, &xor_words, &first_nonzero, &axpy_mod};
}

}  // namespace pathreg::simd
