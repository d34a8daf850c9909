#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pathreg/graph.hpp"
#include "pathreg/graph_io.hpp"

#ifndef PATHREG_FIXTURE_DIR
#error "PATHREG_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace oracle {

using pathreg::Graph;
using pathreg::Vertex;

inline Graph fixture(const std::string& name) {
  return pathreg::read_graph_file(std::string(PATHREG_FIXTURE_DIR) + "/" + name + ".txt");
}

/// All triples (a, b, c) with a < c and b adjacent to both, by scanning every
/// ordered triple.
inline std::vector<std::vector<Vertex>> three_paths(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      for (Vertex b = 0; b < n; ++b) {
        if (b != a && b != c && g.has_edge(a, b) && g.has_edge(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

/// Whether the chosen triples are pairwise disjoint and their union spans
/// exactly 2k edges, checked pair by pair.
inline bool induced_matching(const Graph& g, const std::vector<std::vector<Vertex>>& paths) {
  std::vector<Vertex> covered;
  for (const auto& p : paths) covered.insert(covered.end(), p.begin(), p.end());
  std::vector<Vertex> sorted = covered;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    for (std::size_t j = i + 1; j < covered.size(); ++j) edges += g.has_edge(covered[i], covered[j]) ? 1 : 0;
  }
  return edges == 2 * paths.size();
}

namespace detail {
inline void extend(const Graph& g, const std::vector<std::vector<Vertex>>& all, std::size_t from,
                   std::vector<std::vector<Vertex>>& chosen, std::vector<bool>& used, std::size_t& best,
                   std::size_t cap) {
  if (induced_matching(g, chosen)) best = std::max(best, chosen.size());
  if (chosen.size() == cap) return;
  for (std::size_t i = from; i < all.size(); ++i) {
    const auto& p = all[i];
    if (used[p[0]] || used[p[1]] || used[p[2]]) continue;
    for (Vertex v : p) used[v] = true;
    chosen.push_back(p);
    extend(g, all, i + 1, chosen, used, best, cap);
    chosen.pop_back();
    for (Vertex v : p) used[v] = false;
  }
}
}  // namespace detail

/// Largest induced 3-path matching by enumerating every family of disjoint
/// 3-paths of size at most n / 3.
inline std::size_t nu3_brute_force(const Graph& g) {
  const auto all = three_paths(g);
  std::vector<std::vector<Vertex>> chosen;
  std::vector<bool> used(g.vertex_count(), false);
  std::size_t best = 0;
  detail::extend(g, all, 0, chosen, used, best, g.vertex_count() / 3);
  return best;
}

/// Textbook Prufer decoding with an explicit leaf search at every step.
inline std::vector<std::pair<Vertex, Vertex>> prufer_decode(const std::vector<Vertex>& code, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> seq = code;
  std::vector<bool> removed(n, false);
  for (std::size_t step = 0; step < code.size(); ++step) {
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (removed[leaf]) continue;
      if (std::find(seq.begin() + static_cast<long>(step), seq.end(), leaf) != seq.end()) continue;
      edges.emplace_back(std::min(leaf, seq[step]), std::max(leaf, seq[step]));
      removed[leaf] = true;
      break;
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  edges.emplace_back(rest[0], rest[1]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Disjoint union of s copies of the path 0-1-2.
inline Graph disjoint_p3s(std::size_t s) {
  std::vector<pathreg::Edge> edges;
  for (std::size_t k = 0; k < s; ++k) {
    const auto base = static_cast<Vertex>(3 * k);
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
  }
  return Graph(3 * s, edges);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
