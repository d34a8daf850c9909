#include "pathreg/linalg.hpp"

#include <bit>
#include <numeric>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathreg {
namespace {

std::size_t rank_gf2(const SparseIntMatrix& m, const simd::Kernels& k) {
  const std::size_t words = (m.cols + 63) / 64;
  // pivot_of[c] = index into `pivots` of the stored row whose lead is column c.
  std::vector<std::int32_t> pivot_of(m.cols, -1);
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<std::uint64_t> row(words);

  for (const auto& entries : m.rows) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [c, value] : entries) {
      if (value & 1) row[c / 64] ^= std::uint64_t{1} << (c % 64);
    }
    std::size_t w = 0;
    for (;;) {
      w += k.first_nonzero(row.data() + w, words - w);
      if (w == words) break;
      const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      if (pivot_of[col] < 0) {
        pivot_of[col] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const auto& p = pivots[static_cast<std::size_t>(pivot_of[col])];
      k.xor_words(row.data() + w, p.data() + w, words - w);
    }
  }
  return pivots.size();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_gfp(const SparseIntMatrix& m, std::uint32_t p, const simd::Kernels& k) {
  const std::size_t n = m.cols;
  std::vector<std::int32_t> pivot_of(n, -1);
  std::vector<std::vector<std::uint32_t>> pivots;
  std::vector<std::uint32_t> row(n);
  const auto sp = static_cast<std::int64_t>(p);

  for (const auto& entries : m.rows) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [c, value] : entries) row[c] = static_cast<std::uint32_t>(((value % sp) + sp) % sp);
    std::size_t c = 0;
    for (;;) {
      while (c < n && row[c] == 0) ++c;
      if (c == n) break;
      if (pivot_of[c] < 0) {
        const std::uint32_t inv = inverse_mod(row[c], p);
        for (std::size_t j = c; j < n; ++j) row[j] = static_cast<std::uint32_t>(std::uint64_t{row[j]} * inv % p);
        pivot_of[c] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const auto& piv = pivots[static_cast<std::size_t>(pivot_of[c])];
      k.axpy_mod(row.data() + c, piv.data() + c, p - row[c], p, n - c);
    }
  }
  return pivots.size();
}

struct Overflow {};

struct Checked64 {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
};

struct BigOps {
  using Int = boost::multiprecision::cpp_int;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
};

// Fraction-free elimination: each reduction step replaces the row by
// lead(piv)*row - row[c]*piv and then divides out the row content.
template <typename Int, typename Ops>
std::size_t rank_integer(const SparseIntMatrix& m) {
  const std::size_t n = m.cols;
  std::vector<std::int32_t> pivot_of(n, -1);
  std::vector<std::vector<Int>> pivots;
  std::vector<Int> row(n);

  auto make_primitive = [&](std::size_t from) {
    Int g = 0;
    for (std::size_t j = from; j < n; ++j) {
      if (row[j] != 0) g = Ops::gcd(g, row[j] < 0 ? Int(-row[j]) : row[j]);
    }
    if (g > 1) {
      for (std::size_t j = from; j < n; ++j) row[j] /= g;
    }
  };

  for (const auto& entries : m.rows) {
    std::fill(row.begin(), row.end(), Int(0));
    for (const auto& [c, value] : entries) row[c] = Int(value);
    std::size_t c = 0;
    for (;;) {
      while (c < n && row[c] == 0) ++c;
      if (c == n) break;
      if (pivot_of[c] < 0) {
        make_primitive(c);
        pivot_of[c] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const auto& piv = pivots[static_cast<std::size_t>(pivot_of[c])];
      const Int a = piv[c];
      const Int b = row[c];
      for (std::size_t j = c; j < n; ++j) {
        if (piv[j] == 0 && row[j] == 0) continue;
        row[j] = Ops::sub(Ops::mul(a, row[j]), Ops::mul(b, piv[j]));
      }
      make_primitive(c);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field, const simd::Kernels& kernels) {
  if (m.rows.empty() || m.cols == 0) return 0;
  if (field.characteristic() == 2) return rank_gf2(m, kernels);
  if (!field.is_rational()) return rank_gfp(m, field.characteristic(), kernels);
  try {
    return rank_integer<std::int64_t, Checked64>(m);
  } catch (const Overflow&) {
    return rank_integer<BigOps::Int, BigOps>(m);
  }
}

}  // namespace pathreg
