#include <algorithm>
#include <map>
#include <vector>

#include "pathreg/betti.hpp"
#include "pathreg/error.hpp"
#include "pathreg/linalg.hpp"

// Cross-check route for Betti numbers. Deliberately shares nothing with the
// Hochster path except rank(): faces are produced from the ideal membership
// test directly and chains are indexed by std::map.

namespace pathreg {
namespace {

bool in_ideal(const std::vector<VertexSet>& gens, std::uint64_t monomial) {
  for (VertexSet g : gens) {
    if ((g.bits() & ~monomial) == 0) return true;
  }
  return false;
}

// Reduced homology of K^b(I); returns dims indexed by degree + 1.
std::vector<std::size_t> upper_koszul_homology(const std::vector<VertexSet>& gens, std::uint64_t b,
                                               const FieldSpec& field, const simd::Kernels& kernels) {
  const auto size_of = [](std::uint64_t s) { return static_cast<std::size_t>(__builtin_popcountll(s)); };
  const std::size_t top = size_of(b);

  // chains[k]: faces with k vertices mapped to their column index.
  std::vector<std::map<std::uint64_t, std::uint32_t>> chains(top + 1);
  std::uint64_t f = 0;
  for (;;) {
    if (in_ideal(gens, b & ~f)) {
      auto& layer = chains[size_of(f)];
      layer.emplace(f, static_cast<std::uint32_t>(layer.size()));
    }
    if (f == b) break;
    f = (f - b) & b;  // next submask of b in increasing order
  }
  // Map insertion order is not sorted order; renumber so indices follow keys.
  for (auto& layer : chains) {
    std::uint32_t next = 0;
    for (auto& [face, idx] : layer) idx = next++;
  }

  std::vector<std::size_t> boundary_rank(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    if (chains[k].empty() || chains[k - 1].empty()) continue;
    SparseIntMatrix m;
    m.cols = chains[k - 1].size();
    for (const auto& [face, idx] : chains[k]) {
      auto& row = m.rows.emplace_back();
      std::int64_t sign = 1;
      for (std::size_t v = 0; v < 64; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (!(face & bit)) continue;
        row.emplace_back(chains[k - 1].at(face & ~bit), sign);
        sign = -sign;
      }
    }
    boundary_rank[k] = rank(m, field, kernels);
  }

  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    dims[k] = chains[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return dims;
}

}  // namespace

BettiTable betti_koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t max_vars,
                               const simd::Kernels* kernels) {
  if (ideal.is_unit()) throw InputError("Betti numbers of R/I need a proper ideal (got the unit ideal)");
  const std::size_t n = ideal.ambient();
  if (n > std::min(max_vars, kAbsoluteMaxVars)) {
    throw CapacityError("oracle limited to " + std::to_string(max_vars) + " variables");
  }
  const simd::Kernels& k = kernels ? *kernels : simd::active();

  BettiTable table;
  table.add(0, 0, 1);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < limit; ++b) {
    if (!in_ideal(ideal.generators(), b)) continue;  // K^b is void
    const auto dims = upper_koszul_homology(ideal.generators(), b, field, k);
    const int j = __builtin_popcountll(b);
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      // H~_{i-1}(K^b) = beta_{i,b}(I) = beta_{i+1,b}(R/I); degree i-1 = idx-1.
      table.add(static_cast<int>(idx) + 1, j, dims[idx]);
    }
  }
  return table;
}

}  // namespace pathreg
