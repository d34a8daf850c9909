#include "pathreg/complex.hpp"

#include <algorithm>

#include "pathreg/error.hpp"
#include "pathreg/linalg.hpp"

namespace pathreg {

SimplicialComplex::SimplicialComplex(std::size_t ambient, std::vector<VertexSet> minimal_nonfaces)
    : ambient_(ambient), nonfaces_(minimalize(minimal_nonfaces)) {
  const VertexSet all = VertexSet::range(ambient);
  for (VertexSet s : nonfaces_) {
    if (!s.subset_of(all)) throw InputError("non-face uses a vertex outside the ambient set");
  }
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [s](VertexSet g) { return g.subset_of(s); });
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_within(VertexSet w) const {
  std::vector<std::vector<VertexSet>> out(w.size() + 1);
  const std::uint64_t full = w.bits();
  // Walk every submask of w, including the empty set.
  std::uint64_t s = full;
  for (;;) {
    const VertexSet face(s);
    if (is_face(face)) out[face.size()].push_back(face);
    if (s == 0) break;
    s = (s - 1) & full;
  }
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("the unit ideal has no Stanley-Reisner complex");
  return SimplicialComplex(ideal.ambient(), ideal.generators());
}

std::vector<std::size_t> reduced_homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size,
                                                     const FieldSpec& field, const simd::Kernels& kernels) {
  const std::size_t top = faces_by_size.size();
  // ranks[k] = rank of the boundary map from k-vertex faces to (k-1)-vertex faces.
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    const auto& rows = faces_by_size[k];
    const auto& cols = faces_by_size[k - 1];
    if (rows.empty() || cols.empty()) continue;
    SparseIntMatrix m;
    m.cols = cols.size();
    m.rows.reserve(rows.size());
    for (VertexSet face : rows) {
      auto& entries = m.rows.emplace_back();
      std::int64_t sign = 1;
      for (Vertex v : face) {
        VertexSet facet = face;
        facet.erase(v);
        const auto it = std::lower_bound(cols.begin(), cols.end(), facet);
        entries.emplace_back(static_cast<std::uint32_t>(it - cols.begin()), sign);
        sign = -sign;
      }
    }
    ranks[k] = rank(m, field, kernels);
  }
  std::vector<std::size_t> dims(top, 0);
  for (std::size_t k = 0; k < top; ++k) dims[k] = faces_by_size[k].size() - ranks[k] - ranks[k + 1];
  return dims;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, VertexSet w, const FieldSpec& field,
                                               const simd::Kernels& kernels) {
  if (!w.subset_of(VertexSet::range(complex.ambient()))) throw InputError("vertex subset outside the complex");
  if (complex.is_void()) return std::vector<std::size_t>(w.size() + 1, 0);
  return reduced_homology_from_faces(complex.faces_within(w), field, kernels);
}

}  // namespace pathreg
