#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathreg/vertex_set.hpp"

namespace pathreg {

/// Undirected edge with canonical endpoint order u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Canonicalizes the endpoint order; throws InputError on a loop.
  Edge(Vertex a, Vertex b);

  VertexSet vertices() const { return VertexSet{u, v}; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// A 3-vertex path a - center - c, stored with a < c.
struct Path3 {
  Vertex a = 0;
  Vertex center = 0;
  Vertex c = 0;

  Path3() = default;
  /// Canonicalizes so that a < c; throws InputError unless pairwise distinct.
  Path3(Vertex first, Vertex mid, Vertex last);

  VertexSet vertices() const { return VertexSet{a, center, c}; }
  bool operator==(const Path3&) const = default;
  auto operator<=>(const Path3&) const = default;
};

/// Finite simple undirected graph on dense ids 0..n-1, immutable once built.
/// Optional labels are kept only for input/output.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::range(vertex_count()); }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency(v).size(); }
  /// Open neighbourhood as a bitmask; throws InputError on a bad id.
  VertexSet adjacency(Vertex v) const;
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name: the stored label, or the numeric id.
  std::string label(Vertex v) const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  friend class GraphBuilder;
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Mutable accumulator for building a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0);
  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex u, Vertex v);
  std::size_t vertex_count() const { return adjacency_.size(); }
  Graph build() &&;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  bool any_label_ = false;
};

// ---- neighbourhood operators -------------------------------------------

VertexSet neighbors(const Graph& g, Vertex v);
VertexSet closed_neighbors(const Graph& g, Vertex v);
/// N(e) = (N(x) - y) | (N(y) - x); throws InputError if e is not an edge.
VertexSet edge_neighborhood(const Graph& g, Edge e);
VertexSet closed_edge_neighborhood(const Graph& g, Edge e);
/// Union of closed neighbourhoods of every vertex in s.
VertexSet closed_neighbors(const Graph& g, VertexSet s);
/// Edges {y,z} avoiding x such that {x,y,z} spans a 3-path.
std::vector<Edge> neighborhood_edge_set(const Graph& g, Vertex x);

// ---- paths ---------------------------------------------------------------

/// t = 2: the edge list as (u, v) pairs. t = 3: every Path3, sorted.
std::vector<std::vector<Vertex>> enumerate_t_paths(const Graph& g, int t);
std::vector<Path3> enumerate_3paths(const Graph& g);

// ---- subgraphs -------------------------------------------------------------

/// Result of restricting a graph: `to_parent[i]` is the parent id of local vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(VertexSet local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);
InducedSubgraph delete_vertices(const Graph& g, VertexSet s);

// ---- structure -------------------------------------------------------------

enum class GraphClass { forest, tree, unicyclic, cycle, other };

std::string to_string(GraphClass c);

struct Classification {
  GraphClass kind = GraphClass::other;
  /// Cycle vertices in walking order, for `unicyclic` and `cycle`.
  std::vector<Vertex> cycle;
  /// Per-component classes (vertex sets in order of smallest member).
  std::vector<std::pair<VertexSet, GraphClass>> components;
};

std::vector<VertexSet> connected_components(const Graph& g);
Classification classify(const Graph& g);
bool is_acyclic(const Graph& g);

struct BroomVertex {
  Vertex v = 0;
  /// v_1..v_r: leaves first (ascending), the single allowed non-leaf last.
  std::vector<Vertex> neighbors;

  Vertex last() const { return neighbors.back(); }
};

/// Whether v satisfies the broom condition: deg v >= 2 and at most one
/// neighbour has degree > 1.
bool is_broom_vertex(const Graph& g, Vertex v);

/// Smallest-id broom vertex of a forest. Throws InputError if g has a cycle,
/// NotFoundError if every component is K1 or K2.
BroomVertex find_broom_vertex(const Graph& g);

/// Vertex-disjoint union; labels of both sides are kept when either has them.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace pathreg
