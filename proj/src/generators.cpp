#include "pathreg/generators.hpp"

#include <limits>
#include <vector>

#include "pathreg/error.hpp"

namespace pathreg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // 2^64 mod bound, computed without 128-bit arithmetic.
  const std::uint64_t skew = (max - bound + 1) % bound;
  const std::uint64_t limit = max - skew + 1;  // wraps to 0 when skew == 0
  for (;;) {
    const std::uint64_t x = next();
    if (skew == 0 || x < limit) return x % bound;
  }
}

bool Rng::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

VertexSet Rng::subset(VertexSet from) {
  VertexSet out;
  for (Vertex v : from) {
    if (next() & 1U) out.insert(v);
  }
  return out;
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("random_tree needs n >= 1");
  if (n > kMaxVertices) throw InputError("random_tree: n exceeds the vertex limit");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge(0, 1)});

  std::vector<Vertex> code(n - 2);
  for (auto& s : code) s = static_cast<Vertex>(rng.below(n));

  std::vector<std::size_t> degree(n, 1);
  for (Vertex s : code) ++degree[s];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex s : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

Graph random_unicyclic(std::size_t n, Rng& rng) {
  if (n < 3) throw InputError("random_unicyclic needs n >= 3");
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) non_edges.emplace_back(u, v);
    }
  }
  std::vector<Edge> edges = tree.edges();
  edges.push_back(non_edges[rng.below(non_edges.size())]);
  return Graph(n, edges);
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unicyclic(n, rng);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  if (n > kMaxVertices) throw InputError("random_graph: n exceeds the vertex limit");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph: p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(n, p, rng);
}

}  // namespace pathreg
