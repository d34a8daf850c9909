#include <doctest.h>

#include <string>

#include "pathreg/error.hpp"
#include "pathreg/generators.hpp"
#include "pathreg/graph_io.hpp"

using namespace pathreg;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# header\n\nb a   # trailing comment\na c\n  \nd\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.labels() == std::vector<std::string>{"b", "a", "c", "d"});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.degree(3) == 0);

  CHECK(parse_edge_list("").vertex_count() == 0);
  CHECK(parse_edge_list("a b\nb a\n").edge_count() == 1);
}

TEST_CASE("edge list errors name the line") {
  CHECK(error_of("a b\nb c d\n").find("line 2") != std::string::npos);
  CHECK(error_of("a b\n\nc c\n").find("line 3") != std::string::npos);
}

TEST_CASE("JSON graphs") {
  Graph g = parse_graph(R"({"n": 4, "edges": [[0, 1], [2, 1]], "labels": ["p", "q", "r", "s"]})");
  CHECK(g.vertex_count() == 4);
  CHECK(g.has_edge(1, 2));
  CHECK(g.label(3) == "s");
  CHECK(parse_graph(R"({"n": 2, "edges": []})").edge_count() == 0);

  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0, 2]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 1]]})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0, 1]], "labels": ["a"]})"), InputError);
  CHECK_THROWS_AS(parse_graph("{not json"), InputError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 65, "edges": []})"), InputError);
}

TEST_CASE("serialization round trips") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(1 + seed % 12, 0.3, seed);
    Graph via_text = parse_edge_list(to_edge_list(g));
    Graph via_json = parse_graph_json(to_graph_json(g));
    CHECK(via_json == g);
    CHECK(via_json.labels() == g.labels());
    // Edge-list ids follow first appearance, so compare through the labels.
    REQUIRE(via_text.vertex_count() == g.vertex_count());
    REQUIRE(via_text.edge_count() == g.edge_count());
    for (Edge e : via_text.edges()) {
      CHECK(g.has_edge(static_cast<Vertex>(std::stoul(via_text.label(e.u))),
                       static_cast<Vertex>(std::stoul(via_text.label(e.v)))));
    }
  }

  Graph labelled = parse_edge_list("u v\nv w\nz\n");
  CHECK(parse_edge_list(to_edge_list(labelled)) == labelled);
  CHECK(parse_edge_list(to_edge_list(labelled)).labels() == labelled.labels());
}
