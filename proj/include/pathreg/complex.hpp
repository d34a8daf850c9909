#pragma once

#include <cstddef>
#include <vector>

#include "pathreg/field.hpp"
#include "pathreg/ideal.hpp"
#include "pathreg/simd/kernels.hpp"
#include "pathreg/vertex_set.hpp"

namespace pathreg {

/// Simplicial complex on vertices 0..n-1 given by its minimal non-faces.
/// A set is a face iff it contains no minimal non-face. The void complex (no
/// faces at all, not even the empty set) has the empty set as its non-face.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t ambient, std::vector<VertexSet> minimal_nonfaces);

  static SimplicialComplex void_complex(std::size_t ambient) { return {ambient, {VertexSet{}}}; }
  static SimplicialComplex simplex(std::size_t ambient) { return {ambient, {}}; }

  std::size_t ambient() const { return ambient_; }
  const std::vector<VertexSet>& minimal_nonfaces() const { return nonfaces_; }
  bool is_void() const { return !nonfaces_.empty() && nonfaces_.front().empty(); }
  bool is_face(VertexSet s) const;

  /// All faces contained in w, grouped by cardinality (index k holds the faces
  /// with k vertices, each list sorted by mask).
  std::vector<std::vector<VertexSet>> faces_within(VertexSet w) const;

  /// The squarefree ideal whose generators are the minimal non-faces.
  MonomialIdeal ideal() const { return MonomialIdeal(ambient_, nonfaces_); }

 private:
  std::size_t ambient_;
  std::vector<VertexSet> nonfaces_;
};

/// Stanley-Reisner complex of I. Throws InputError for the unit ideal.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// dim H~_d(Delta_W; F) for d = -1 .. |W|-1; entry k of the result is degree k-1.
/// {emptyset} has only H~_{-1} = 1; the void complex has no homology at all.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, VertexSet w,
                                               const FieldSpec& field = FieldSpec::gf2(),
                                               const simd::Kernels& kernels = simd::active());

/// Same computation from an explicit face list grouped by cardinality (index k
/// = faces with k vertices, sorted by mask; index 0 is {emptyset} or empty for
/// the void complex). Result length equals faces_by_size.size().
std::vector<std::size_t> reduced_homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size,
                                                     const FieldSpec& field, const simd::Kernels& kernels);

}  // namespace pathreg
