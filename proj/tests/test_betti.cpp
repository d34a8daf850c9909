#include <doctest.h>

#include <cstdlib>
#include <map>

#include "oracles.hpp"
#include "pathreg/betti.hpp"
#include "pathreg/error.hpp"
#include "pathreg/generators.hpp"
#include "pathreg/ideal.hpp"

using namespace pathreg;

namespace {

using Entries = std::map<BettiTable::Key, std::uint64_t>;

MonomialIdeal i3(const Graph& g) { return path_ideal(g, 3); }

Entries with_unit(Entries e) {
  e[{0, 0}] = 1;
  return e;
}

MonomialIdeal random_ideal(Rng& rng, std::size_t n) {
  std::vector<VertexSet> gens;
  const auto count = 1 + rng.below(6);
  for (std::uint64_t k = 0; k < count; ++k) {
    VertexSet s = rng.subset(VertexSet::range(n));
    if (s.empty()) s.insert(static_cast<Vertex>(rng.below(n)));
    gens.push_back(s);
  }
  return MonomialIdeal(n, gens);
}

}  // namespace

TEST_CASE("small Betti tables") {
  auto single = betti_hochster(MonomialIdeal(3, {{0, 1, 2}}));
  CHECK(single.entries() == with_unit({{{1, 3}, 1}}));
  CHECK(single.regularity() == 2);
  CHECK(single.projective_dimension() == 1);

  CHECK(betti_hochster(i3(path_graph(4))).entries() == with_unit({{{1, 3}, 2}, {{2, 4}, 1}}));

  auto two = betti_hochster(i3(oracle::disjoint_p3s(2)));
  CHECK(two.entries() == with_unit({{{1, 3}, 2}, {{2, 6}, 1}}));
  CHECK(two.regularity() == 4);

  auto zero = betti_hochster(MonomialIdeal::zero(5));
  CHECK(zero.entries() == with_unit({}));
  CHECK(zero.regularity() == 0);
  CHECK_THROWS_AS(betti_hochster(MonomialIdeal::unit(3)), InputError);
  CHECK_THROWS_AS(betti_koszul_oracle(MonomialIdeal::unit(3)), InputError);
}

TEST_CASE("fixture Betti tables") {
  // Values confirmed by the Koszul oracle below.
  const std::map<std::string, Entries> expected{
      {"fig1", with_unit({{{1, 3}, 6}, {{2, 4}, 6}, {{3, 5}, 1}, {{2, 6}, 1}, {{3, 7}, 1}})},
      {"fig2_g1", with_unit({{{1, 3}, 7}, {{2, 4}, 9}, {{3, 5}, 3}})},
      {"fig2_g2", with_unit({{{1, 3}, 8}, {{2, 4}, 10}, {{3, 5}, 2}, {{3, 6}, 1}})},
      {"fig2_g3", with_unit({{{1, 3}, 12},
                             {{2, 4}, 15},
                             {{2, 6}, 15},
                             {{3, 5}, 3},
                             {{3, 7}, 31},
                             {{4, 8}, 16},
                             {{4, 10}, 1},
                             {{5, 9}, 1},
                             {{5, 11}, 1}})},
  };
  for (const auto& [name, entries] : expected) {
    CAPTURE(name);
    auto ideal = i3(oracle::fixture(name));
    auto table = betti_hochster(ideal);
    CHECK(table.entries() == entries);
    CHECK(betti_koszul_oracle(ideal) == table);
  }
}

TEST_CASE("regularity of the fixtures") {
  CHECK(regularity(i3(oracle::fixture("fig2_g1"))) == Regularity::of(2));
  CHECK(regularity(i3(oracle::fixture("fig2_g2"))) == Regularity::of(3));
  CHECK(regularity(i3(oracle::fixture("fig2_g3"))) == Regularity::of(6));
  CHECK(regularity(i3(oracle::fixture("fig1"))) == Regularity::of(4));
  CHECK(regularity(MonomialIdeal::zero(4)) == Regularity::of(0));
  CHECK(regularity(MonomialIdeal::unit(4)) == Regularity::minus_infinity());
}

TEST_CASE("regularity type") {
  auto inf = Regularity::minus_infinity();
  CHECK(inf < Regularity::of(-100));
  CHECK(Regularity::of(2) < Regularity::of(3));
  CHECK((inf + 4) == inf);
  CHECK((Regularity::of(1) + 2) == Regularity::of(3));
  CHECK(inf.to_string() == "-inf");
  CHECK_FALSE(inf.is_finite());
  CHECK(std::max(inf, Regularity::of(0)) == Regularity::of(0));
}

TEST_CASE("Hochster matches the Koszul oracle on random ideals") {
  Rng rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    auto ideal = random_ideal(rng, n);
    if (ideal.is_unit()) continue;
    for (auto f : {FieldSpec::gf2(), FieldSpec::rationals()}) CHECK(betti_hochster(ideal, f) == betti_koszul_oracle(ideal, f));
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto ideal = i3(random_graph(3 + seed % 7, 0.35, seed));
    CHECK(betti_hochster(ideal) == betti_koszul_oracle(ideal));
  }
}

TEST_CASE("first syzygies count the generators by degree") {
  Rng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    auto ideal = random_ideal(rng, 2 + rng.below(7));
    if (ideal.is_unit()) continue;
    std::map<int, std::uint64_t> by_degree;
    for (VertexSet g : ideal.generators()) ++by_degree[static_cast<int>(g.size())];
    auto table = betti_hochster(ideal);
    for (int j = 0; j <= static_cast<int>(ideal.ambient()); ++j) CHECK(table.at(1, j) == by_degree[j]);
  }
}

TEST_CASE("disjoint 3-paths give a complete intersection") {
  for (std::size_t s = 1; s <= 4; ++s) {
    auto table = betti_hochster(i3(oracle::disjoint_p3s(s)));
    Entries expected;
    for (std::size_t i = 0; i <= s; ++i) {
      expected[{static_cast<int>(i), static_cast<int>(3 * i)}] = oracle::binomial(s, i);
    }
    CHECK(table.entries() == expected);
    CHECK(table.regularity() == static_cast<int>(2 * s));
  }
}

TEST_CASE("cone pruning and threading do not change the table") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto ideal = i3(random_graph(4 + seed % 6, 0.4, seed));
    BettiOptions plain;
    plain.prune_cones = false;
    auto reference = betti_hochster(ideal, FieldSpec::gf2(), plain);
    CHECK(betti_hochster(ideal) == reference);
    BettiOptions threaded;
    threaded.threads = 1 + seed % 8;
    CHECK(betti_hochster(ideal, FieldSpec::gf2(), threaded) == reference);
    for (auto isa : simd::available()) {
      BettiOptions k;
      k.kernels = simd::kernels_for(isa);
      CHECK(betti_hochster(ideal, FieldSpec(32749), k) == betti_hochster(ideal, FieldSpec(32749)));
    }
  }
}

TEST_CASE("fixtures agree across fields") {
  for (const char* name : {"fig1", "fig2_g1", "fig2_g2", "fig2_g3"}) {
    CAPTURE(name);
    auto ideal = i3(oracle::fixture(name));
    auto gf2 = betti_hochster(ideal, FieldSpec::gf2());
    CHECK(betti_hochster(ideal, FieldSpec(3)) == gf2);
    CHECK(betti_hochster(ideal, FieldSpec::rationals()) == gf2);
  }
}

TEST_CASE("variable cap") {
  auto ideal = i3(path_graph(23));
  CHECK_THROWS_AS(betti_hochster(ideal), CapacityError);
  BettiOptions small;
  small.max_vars = 4;
  CHECK_THROWS_AS(betti_hochster(i3(path_graph(5)), FieldSpec::gf2(), small), CapacityError);
  BettiOptions huge;
  huge.max_vars = 40;
  CHECK_THROWS_AS(betti_hochster(i3(path_graph(31)), FieldSpec::gf2(), huge), CapacityError);
  CHECK_THROWS_AS(betti_koszul_oracle(i3(path_graph(17))), CapacityError);
}

TEST_CASE("variable cap from the environment") {
  const char* saved = std::getenv("PATHREG_MAX_VARS");
  const std::string restore = saved ? saved : "";
  ::setenv("PATHREG_MAX_VARS", "10", 1);
  CHECK(default_max_vars() == 10);
  ::setenv("PATHREG_MAX_VARS", "31", 1);
  CHECK(default_max_vars() == kDefaultMaxVars);
  ::setenv("PATHREG_MAX_VARS", "twelve", 1);
  CHECK(default_max_vars() == kDefaultMaxVars);
  if (saved) {
    ::setenv("PATHREG_MAX_VARS", restore.c_str(), 1);
  } else {
    ::unsetenv("PATHREG_MAX_VARS");
  }
}

TEST_CASE("short exact sequence bound") {
  auto p4 = i3(path_graph(4));
  auto b = verify_ses_bound(p4, {VertexSet{1, 2}});
  CHECK(b.reg_ideal == Regularity::of(2));
  CHECK(b.colon_term == Regularity::of(2));
  CHECK(b.sum_term == Regularity::of(1));
  CHECK(b.holds);
  CHECK(b.slack() == 0);

  auto member = verify_ses_bound(p4, {VertexSet{0, 1, 2}});
  CHECK(member.colon_term == Regularity::minus_infinity());
  CHECK(member.sum_term == member.reg_ideal);
  CHECK(member.holds);

  auto g1 = verify_ses_bound(i3(oracle::fixture("fig2_g1")), {VertexSet{0, 5}});
  CHECK(g1.holds);
  REQUIRE(g1.slack().has_value());
  CHECK(*g1.slack() >= 0);

  CHECK_THROWS_AS(verify_ses_bound(p4, {VertexSet{}}), InputError);
}

TEST_CASE("Betti table output") {
  auto table = betti_hochster(i3(path_graph(4)));
  CHECK(betti_csv(table) == "i,j,beta\n0,0,1\n1,3,2\n2,4,1\n");
  CHECK(betti_json(table, FieldSpec::gf2()) == R"({"betti":[[0,0,1],[1,3,2],[2,4,1]],"reg":2,"pd":2,"field":"gf2"})");
  CHECK(betti_pretty(table) ==
        "     0  1  2\n"
        " 0:  1  .  .\n"
        " 1:  .  .  .\n"
        " 2:  .  2  1\n");
}
