#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pathreg/complex.hpp"
#include "pathreg/error.hpp"
#include "pathreg/generators.hpp"
#include "pathreg/ideal.hpp"

using namespace pathreg;

namespace {

MonomialIdeal ideal_of(std::size_t n, std::vector<VertexSet> gens) { return MonomialIdeal(n, std::move(gens)); }

SquarefreeMonomial mono(std::initializer_list<Vertex> vs) { return {VertexSet(vs)}; }

// Direct membership-based colon: m' is in (I : m) iff m' * m is in I. Checks
// every squarefree monomial on the ambient variables.
bool same_as_brute_colon(const MonomialIdeal& ideal, SquarefreeMonomial m, const MonomialIdeal& got) {
  const std::size_t n = ideal.ambient();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SquarefreeMonomial x{VertexSet(bits)};
    if (ideal.contains(x * m) != got.contains(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("path ideals") {
  CHECK(path_ideal(path_graph(3), 3).generators() == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(path_ideal(path_graph(4), 3).generators() == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
  CHECK(path_ideal(complete_graph(3), 3).generators() == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(path_ideal(path_graph(4), 2).generator_count() == 3);
  CHECK(path_ideal(Graph(4), 3).is_zero());
  CHECK(path_ideal(path_graph(4), 3).ambient() == 4);
  CHECK_THROWS_AS(path_ideal(path_graph(4), 5), InputError);
}

TEST_CASE("minimalization") {
  CHECK(minimalize(std::vector<VertexSet>{{0, 1}, {0, 1, 2}}) == std::vector<VertexSet>{{0, 1}});
  CHECK(minimalize(std::vector<VertexSet>{}).empty());
  CHECK(minimalize(std::vector<VertexSet>{{0}, {1}, {0, 1}}) == std::vector<VertexSet>{{0}, {1}});
  CHECK(minimalize(std::vector<VertexSet>{{2, 3}, {2, 3}}) == std::vector<VertexSet>{{2, 3}});
  CHECK(MonomialIdeal(3, {{0}, {}}).is_unit());
  CHECK_THROWS_AS(MonomialIdeal(3, {{0, 3}}), InputError);
}

TEST_CASE("minimalization is idempotent and order independent") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexSet> gens;
    const auto count = rng.below(8);
    for (std::uint64_t k = 0; k < count; ++k) gens.push_back(rng.subset(VertexSet::range(7)));
    auto once = minimalize(gens);
    CHECK(minimalize(once) == once);
    std::reverse(gens.begin(), gens.end());
    CHECK(minimalize(gens) == once);
    for (std::size_t i = 0; i < once.size(); ++i) {
      for (std::size_t j = 0; j < once.size(); ++j) {
        if (i != j) CHECK_FALSE(once[i].subset_of(once[j]));
      }
    }
    // Same ideal: every input generator is divisible by a kept one.
    for (VertexSet g : gens) {
      CHECK(std::any_of(once.begin(), once.end(), [&](VertexSet k) { return k.subset_of(g); }));
    }
  }
}

TEST_CASE("colon ideals") {
  auto p4 = path_ideal(path_graph(4), 3);
  CHECK(colon(p4, mono({1, 2})).generators() == std::vector<VertexSet>{{0}, {3}});
  CHECK(colon(p4, mono({})) == p4);
  auto tri = ideal_of(4, {{0, 1, 2}});
  CHECK(colon(tri, mono({3})) == tri);
  CHECK(colon(tri, mono({0, 1, 2})).is_unit());
  CHECK(colon(MonomialIdeal::zero(3), mono({1})).is_zero());
}

TEST_CASE("colon agrees with the membership definition") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto ideal = path_ideal(random_graph(7, 0.4, seed), 3);
    Rng rng(seed);
    auto m = SquarefreeMonomial{rng.subset(VertexSet::range(7))};
    CHECK(same_as_brute_colon(ideal, m, colon(ideal, m)));
  }
}

TEST_CASE("colon by coprime factors chains") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto ideal = path_ideal(random_graph(9, 0.35, seed), 3);
    Rng rng(seed + 1000);
    VertexSet a = rng.subset(VertexSet::range(9));
    VertexSet b = rng.subset(VertexSet::range(9)) - a;
    CHECK(colon(colon(ideal, {a}), {b}) == colon(ideal, {a | b}));
  }
}

TEST_CASE("sums of ideals") {
  CHECK(add(ideal_of(3, {{0, 1, 2}}), ideal_of(3, {{0}})).generators() == std::vector<VertexSet>{{0}});
  CHECK(add(path_ideal(path_graph(4), 3), ideal_of(4, {{1, 2}})).generators() == std::vector<VertexSet>{{1, 2}});
  CHECK(add_vars(MonomialIdeal::zero(3), {0, 2}) == MonomialIdeal::variables(3, {0, 2}));
  CHECK_THROWS_AS(add(MonomialIdeal::zero(3), MonomialIdeal::zero(4)), InputError);
}

TEST_CASE("colon by an edge") {
  CHECK(colon_by_edge_rhs(path_graph(4), {1, 2}).generators() == std::vector<VertexSet>{{0}, {3}});
  CHECK(colon_by_edge_rhs(path_graph(7), {2, 3}).generators() == std::vector<VertexSet>{{1}, {4}});
  Graph fig1 = oracle::fixture("fig1");
  // x4x5: <x3, x6> plus the path x1-x2-x7.
  CHECK(colon_by_edge_rhs(fig1, {3, 4}).generators() == std::vector<VertexSet>{{2}, {5}, {0, 1, 6}});
  CHECK_THROWS_AS(colon_by_edge_rhs(fig1, {0, 2}), InputError);
}

TEST_CASE("colon after adding an edge") {
  CHECK(colon_after_edge_rhs(path_graph(4), 1, 2).generators() == std::vector<VertexSet>{{2}});
  CHECK(colon_after_edge_rhs(star_graph(3), 0, 1).generators() == std::vector<VertexSet>{{1}, {2, 3}});
  CHECK(colon_after_edge_rhs(path_graph(3), 1, 0).generators() == std::vector<VertexSet>{{0}});

  auto p4 = path_ideal(path_graph(4), 3);
  CHECK(colon(add(p4, ideal_of(4, {{1, 2}})), mono({1})) == colon_after_edge_rhs(path_graph(4), 1, 2));
  CHECK_THROWS_AS(colon_after_edge_rhs(path_graph(4), 0, 2), InputError);
}

TEST_CASE("both colon decompositions hold on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = random_graph(4 + seed % 7, 0.4, seed);
    auto ideal = path_ideal(g, 3);
    for (Edge e : g.edges()) {
      CHECK(colon(ideal, {e.vertices()}) == colon_by_edge_rhs(g, e));
      auto with_edge = add(ideal, MonomialIdeal(g.vertex_count(), {e.vertices()}));
      CHECK(colon(with_edge, mono({e.u})) == colon_after_edge_rhs(g, e.u, e.v));
      CHECK(colon(with_edge, mono({e.v})) == colon_after_edge_rhs(g, e.v, e.u));
    }
  }
}

TEST_CASE("restriction to a vertex subset") {
  auto ideal = ideal_of(6, {{1, 3}, {3, 5}});
  auto r = reambient(ideal, {1, 3, 5});
  CHECK(r.ambient() == 3);
  CHECK(r.generators() == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(reambient(ideal, {1, 3}), InputError);

  Graph g = oracle::fixture("fig1");
  auto sub = induced_subgraph(g, {0, 1, 2, 6});
  auto lifted = lift_ideal(path_ideal(sub.graph, 3), sub, g.vertex_count());
  CHECK(lifted.generators() == std::vector<VertexSet>{{0, 1, 2}, {0, 1, 6}, {1, 2, 6}});
}

TEST_CASE("Stanley-Reisner complexes") {
  auto tri = stanley_reisner(ideal_of(3, {{0, 1, 2}}));
  CHECK_FALSE(tri.is_face({0, 1, 2}));
  CHECK(tri.is_face({0, 1}));
  CHECK(tri.is_face({}));
  auto full = stanley_reisner(MonomialIdeal::zero(4));
  CHECK(full.is_face({0, 1, 2, 3}));
  CHECK_THROWS_AS(stanley_reisner(MonomialIdeal::unit(3)), InputError);

  auto p4 = stanley_reisner(path_ideal(path_graph(4), 3));
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    VertexSet s(bits);
    const bool expected = !VertexSet({0, 1, 2}).subset_of(s) && !VertexSet({1, 2, 3}).subset_of(s);
    CHECK(p4.is_face(s) == expected);
  }
}

TEST_CASE("minimal non-faces recover the ideal") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto ideal = path_ideal(random_graph(8, 0.35, seed), 3);
    auto complex = stanley_reisner(ideal);
    CHECK(complex.ideal() == ideal);
    // Minimal non-faces found by scanning every subset.
    std::vector<VertexSet> scanned;
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      VertexSet s(bits);
      if (complex.is_face(s)) continue;
      bool minimal = true;
      for (Vertex v : s) minimal = minimal && complex.is_face(s - VertexSet::singleton(v));
      if (minimal) scanned.push_back(s);
    }
    std::sort(scanned.begin(), scanned.end());
    CHECK(scanned == ideal.generators());
  }
}

TEST_CASE("ideal text and JSON") {
  auto ideal = ideal_of(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(to_text(ideal) == "x0*x1*x2\nx1*x2*x3\n");
  CHECK(to_text(ideal, {"a", "b", "c", "d"}) == "a*b*c\nb*c*d\n");
  CHECK(parse_ideal_text(to_text(ideal), 4) == ideal);
  CHECK(parse_ideal_text("c*b*a\n", 4, {"a", "b", "c", "d"}).generators() == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(parse_ideal_text("", 3).is_zero());
  CHECK(parse_ideal_text("1\n", 3).is_unit());
  CHECK(to_text(MonomialIdeal::unit(2)) == "1\n");
  CHECK_THROWS_AS(parse_ideal_text("x0*y\n", 3), InputError);

  CHECK(to_json(ideal) == "[[0,1,2],[1,2,3]]");
  CHECK(parse_ideal_json(to_json(ideal), 4) == ideal);
  CHECK_THROWS_AS(parse_ideal_json("[[0,9]]", 4), InputError);
}
