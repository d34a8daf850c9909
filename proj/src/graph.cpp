#include "pathreg/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathreg/error.hpp"

namespace pathreg {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw InputError("edge endpoints must differ (loop at " + std::to_string(a) + ")");
}

Path3::Path3(Vertex first, Vertex mid, Vertex last)
    : a(std::min(first, last)), center(mid), c(std::max(first, last)) {
  if (first == mid || mid == last || first == last) {
    throw InputError("3-path vertices must be pairwise distinct");
  }
}

Graph::Graph(std::size_t n, std::vector<std::string> labels) : adjacency_(n), labels_(std::move(labels)) {
  if (n > kMaxVertices) {
    throw InputError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  if (!labels_.empty() && labels_.size() != n) throw InputError("label count does not match vertex count");
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : Graph(n, std::move(labels)) {
  for (const Edge& e : edges) {
    check_vertex(e.v);
    if (!adjacency_[e.u].contains(e.v)) ++edge_count_;
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range (n = " +
                     std::to_string(adjacency_.size()) + ")");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

VertexSet Graph::adjacency(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

GraphBuilder::GraphBuilder(std::size_t n) : adjacency_(n), labels_(n) {}

Vertex GraphBuilder::add_vertex(std::string label) {
  if (adjacency_.size() >= kMaxVertices) {
    throw InputError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  any_label_ = any_label_ || !label.empty();
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= adjacency_.size() || v >= adjacency_.size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

Graph GraphBuilder::build() && {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  if (any_label_) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) labels_[i] = std::to_string(i);
    }
    return Graph(adjacency_.size(), edges, std::move(labels_));
  }
  return Graph(adjacency_.size(), edges);
}

VertexSet neighbors(const Graph& g, Vertex v) { return g.adjacency(v); }

VertexSet closed_neighbors(const Graph& g, Vertex v) { return g.adjacency(v) | VertexSet::singleton(v); }

VertexSet closed_neighbors(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.adjacency(v);
  return out;
}

VertexSet edge_neighborhood(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw InputError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
  }
  return (g.adjacency(e.u) | g.adjacency(e.v)) - e.vertices();
}

VertexSet closed_edge_neighborhood(const Graph& g, Edge e) { return edge_neighborhood(g, e) | e.vertices(); }

std::vector<Edge> neighborhood_edge_set(const Graph& g, Vertex x) {
  const VertexSet nx = g.adjacency(x);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    // {x,y,z} spans a 3-path through the edge yz exactly when x sees y or z.
    if (nx.contains(e.u) || nx.contains(e.v)) out.push_back(e);
  }
  return out;
}

std::vector<Path3> enumerate_3paths(const Graph& g) {
  std::vector<Path3> out;
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const auto nb = g.adjacency(b).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) out.emplace_back(nb[i], b, nb[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> enumerate_t_paths(const Graph& g, int t) {
  std::vector<std::vector<Vertex>> out;
  if (t == 2) {
    for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  } else if (t == 3) {
    for (const Path3& p : enumerate_3paths(g)) out.push_back({p.a, p.center, p.c});
  } else {
    throw InputError("only t = 2 and t = 3 are supported (got " + std::to_string(t) + ")");
  }
  return out;
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(to_parent.at(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) throw InputError("vertex subset is not contained in the graph");
  InducedSubgraph out;
  out.to_parent = w.to_vector();
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : w) {
    for (Vertex v : g.adjacency(u) & w) {
      if (u < v) edges.emplace_back(local[u], local[v]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : out.to_parent) labels.push_back(g.labels()[v]);
  }
  out.graph = Graph(out.to_parent.size(), edges, std::move(labels));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) { return induced_subgraph(g, g.vertices() - s); }

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::forest: return "forest";
    case GraphClass::tree: return "tree";
    case GraphClass::unicyclic: return "unicyclic";
    case GraphClass::cycle: return "cycle";
    case GraphClass::other: return "other";
  }
  return "other";
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.adjacency(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

namespace {

std::size_t edges_within(const Graph& g, VertexSet w) {
  std::size_t twice = 0;
  for (Vertex v : w) twice += (g.adjacency(v) & w).size();
  return twice / 2;
}

// Leaf-stripping leaves exactly the cycle of a connected unicyclic graph.
std::vector<Vertex> extract_cycle(const Graph& g, VertexSet comp) {
  VertexSet core = comp;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : core) {
      if ((g.adjacency(v) & core).size() <= 1) {
        core.erase(v);
        changed = true;
      }
    }
  }
  std::vector<Vertex> cycle;
  if (core.empty()) return cycle;
  Vertex prev = core.front();
  Vertex cur = prev;
  cycle.push_back(cur);
  cur = (g.adjacency(cur) & core).front();
  while (cur != cycle.front()) {
    cycle.push_back(cur);
    const VertexSet next = (g.adjacency(cur) & core) - VertexSet::singleton(prev);
    prev = cur;
    cur = next.front();
  }
  return cycle;
}

GraphClass classify_component(const Graph& g, VertexSet comp) {
  const std::size_t n = comp.size();
  const std::size_t m = edges_within(g, comp);
  if (m + 1 == n) return GraphClass::tree;
  if (m == n) {
    bool all_two = true;
    for (Vertex v : comp) all_two = all_two && g.degree(v) == 2;
    return all_two ? GraphClass::cycle : GraphClass::unicyclic;
  }
  return GraphClass::other;
}

}  // namespace

Classification classify(const Graph& g) {
  Classification out;
  const auto comps = connected_components(g);
  for (VertexSet c : comps) out.components.emplace_back(c, classify_component(g, c));

  if (comps.size() == 1) {
    out.kind = out.components.front().second;
    if (out.kind == GraphClass::unicyclic || out.kind == GraphClass::cycle) {
      out.cycle = extract_cycle(g, comps.front());
    }
    return out;
  }
  const bool all_trees = std::all_of(out.components.begin(), out.components.end(),
                                     [](const auto& pc) { return pc.second == GraphClass::tree; });
  out.kind = all_trees ? GraphClass::forest : GraphClass::other;
  return out;
}

bool is_acyclic(const Graph& g) { return g.edge_count() + connected_components(g).size() == g.vertex_count(); }

bool is_broom_vertex(const Graph& g, Vertex v) {
  const VertexSet nv = g.adjacency(v);
  if (nv.size() < 2) return false;
  std::size_t non_leaves = 0;
  for (Vertex w : nv) non_leaves += g.degree(w) > 1 ? 1 : 0;
  return non_leaves <= 1;
}

BroomVertex find_broom_vertex(const Graph& g) {
  if (!is_acyclic(g)) throw InputError("broom vertices are only defined for trees and forests");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!is_broom_vertex(g, v)) continue;
    BroomVertex out{v, {}};
    std::optional<Vertex> inner;
    for (Vertex w : g.adjacency(v)) {
      if (g.degree(w) > 1) {
        inner = w;
      } else {
        out.neighbors.push_back(w);
      }
    }
    if (inner) out.neighbors.push_back(*inner);
    return out;
  }
  throw NotFoundError("graph has no vertex of degree >= 2 whose neighbours are all but one leaves");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t offset = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.emplace_back(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
  }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.label(v) + "'");
  }
  return Graph(offset + b.vertex_count(), edges, std::move(labels));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, edges);
}

}  // namespace pathreg
