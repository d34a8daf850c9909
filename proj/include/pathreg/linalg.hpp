#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pathreg/field.hpp"
#include "pathreg/simd/kernels.hpp"

namespace pathreg {

/// Integer matrix in row-major sparse form; each row lists (column, value) with
/// distinct columns. Boundary matrices have values in {-1, +1}.
struct SparseIntMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

/// Exact rank over `field`. GF(2) and GF(p) eliminate on packed rows using the
/// given kernel table; characteristic 0 uses fraction-free integer elimination
/// (64-bit, switching to arbitrary precision on overflow).
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field, const simd::Kernels& kernels = simd::active());

}  // namespace pathreg
