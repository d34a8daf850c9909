#include <doctest.h>

#include <algorithm>

#include "pathreg/complex.hpp"

using namespace pathreg;

namespace {

using Dims = std::vector<std::size_t>;

// Complex generated by the given facets, described by its minimal non-faces.
SimplicialComplex from_facets(std::size_t n, const std::vector<VertexSet>& facets) {
  auto is_face = [&](VertexSet s) {
    return std::any_of(facets.begin(), facets.end(), [&](VertexSet f) { return s.subset_of(f); });
  };
  std::vector<VertexSet> nonfaces;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s(bits);
    if (is_face(s)) continue;
    bool minimal = true;
    for (Vertex v : s) minimal = minimal && is_face(s - VertexSet::singleton(v));
    if (minimal) nonfaces.push_back(s);
  }
  return {n, nonfaces};
}

// Six-vertex real projective plane: torsion in H_1 over the integers.
SimplicialComplex projective_plane() {
  return from_facets(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                         {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("face enumeration") {
  SimplicialComplex boundary(3, {{0, 1, 2}});
  auto faces = boundary.faces_within({0, 1, 2});
  REQUIRE(faces.size() == 4);
  CHECK(faces[0] == std::vector<VertexSet>{VertexSet{}});
  CHECK(faces[1].size() == 3);
  CHECK(faces[2] == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(faces[3].empty());
  CHECK(SimplicialComplex::void_complex(3).is_void());
  CHECK_FALSE(SimplicialComplex::void_complex(3).is_face({}));
}

TEST_CASE("reduced homology conventions") {
  SimplicialComplex boundary(3, {{0, 1, 2}});
  CHECK(reduced_homology_dims(boundary, {0, 1, 2}) == Dims{0, 0, 1, 0});
  CHECK(reduced_homology_dims(boundary, {0, 1}) == Dims{0, 0, 0});
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4), {0, 1, 2, 3}) == Dims{0, 0, 0, 0, 0});

  SimplicialComplex two_points(2, {{0, 1}});
  CHECK(reduced_homology_dims(two_points, {0, 1}) == Dims{0, 1, 0});
  // The complex {emptyset}: only H~_{-1}.
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(2), {}) == Dims{1});
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(2), {0, 1}) == Dims{0, 0, 0});

  // Three isolated points and a hollow square.
  SimplicialComplex points(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(reduced_homology_dims(points, {0, 1, 2}) == Dims{0, 2, 0, 0});
  SimplicialComplex square(4, {{0, 2}, {1, 3}});
  CHECK(reduced_homology_dims(square, {0, 1, 2, 3}) == Dims{0, 0, 1, 0, 0});
}

TEST_CASE("homology depends on the characteristic") {
  const auto rp2 = projective_plane();
  const VertexSet all = VertexSet::range(6);
  CHECK(reduced_homology_dims(rp2, all, FieldSpec::gf2()) == Dims{0, 0, 1, 1, 0, 0, 0});
  CHECK(reduced_homology_dims(rp2, all, FieldSpec(3)) == Dims(7, 0));
  CHECK(reduced_homology_dims(rp2, all, FieldSpec::rationals()) == Dims(7, 0));
  for (auto isa : simd::available()) {
    CHECK(reduced_homology_dims(rp2, all, FieldSpec::gf2(), *simd::kernels_for(isa)) == Dims{0, 0, 1, 1, 0, 0, 0});
  }
}

TEST_CASE("homology from an explicit face list") {
  const auto rp2 = projective_plane();
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    VertexSet w(bits);
    for (auto f : {FieldSpec::gf2(), FieldSpec::rationals()}) {
      CHECK(reduced_homology_from_faces(rp2.faces_within(w), f, simd::active()) ==
            reduced_homology_dims(rp2, w, f));
    }
  }
}

TEST_CASE("Euler characteristic matches face counts") {
  const auto rp2 = projective_plane();
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    VertexSet w(bits);
    auto faces = rp2.faces_within(w);
    auto dims = reduced_homology_dims(rp2, w, FieldSpec::rationals());
    long chi_faces = 0;
    long chi_homology = 0;
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const long sign = (k % 2 == 0) ? -1 : 1;  // k vertices = dimension k - 1
      chi_faces += sign * static_cast<long>(faces[k].size());
      chi_homology += sign * static_cast<long>(dims[k]);
    }
    CHECK(chi_faces == chi_homology);
  }
}
