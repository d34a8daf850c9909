#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathreg/graph.hpp"

namespace pathreg {

/// A set of 3-paths claimed to form an induced matching, with its covered vertices.
struct MatchingCertificate {
  std::vector<Path3> paths;
  VertexSet covered;

  std::size_t size() const { return paths.size(); }
};

/// Why a family of 3-paths fails to be an induced matching.
struct SharedVertex {
  Vertex vertex;
};
struct ExtraEdge {
  Edge edge;
};
using MatchingViolation = std::variant<SharedVertex, ExtraEdge>;

std::string describe(const MatchingViolation& v, const Graph& g);

/// nullopt when `paths` are pairwise vertex-disjoint and the covered vertices
/// induce exactly their 2s edges; otherwise a witness. Throws InputError if a
/// triple is not a 3-path of g.
std::optional<MatchingViolation> find_matching_violation(const Graph& g, const std::vector<Path3>& paths);
bool is_induced_3path_matching(const Graph& g, const std::vector<Path3>& paths);

struct Nu3Result {
  std::size_t value = 0;
  MatchingCertificate certificate;
};

/// Exact 3-path induced matching number by branch and bound over the sorted
/// 3-path list, include-branch first. The certificate is the first optimum found.
Nu3Result nu3(const Graph& g);

struct MonotoneCheck {
  std::size_t nu3_sub = 0;
  std::size_t nu3_graph = 0;
  bool holds = false;
};

/// nu3(G[W]) <= nu3(G).
MonotoneCheck check_nu3_monotone(const Graph& g, VertexSet w);

struct BroomDropCheck {
  Edge edge;
  std::size_t nu3_rest = 0;  // nu3(G - N[e])
  std::size_t nu3_graph = 0;
  bool holds = false;  // nu3_rest + 1 <= nu3_graph
};

/// With v the broom vertex and v_r its designated last neighbour, checks
/// nu3(G - N[{v, v_r}]) <= nu3(G) - 1.
BroomDropCheck check_broom_drop(const Graph& g);

/// {"nu3": s, "paths": [[a,b,c],...]} with each triple in a-center-c order.
std::string certificate_json(const Nu3Result& r);

}  // namespace pathreg
