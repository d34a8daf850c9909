#include "pathreg/matching.hpp"

#include <algorithm>

#include <json.hpp>

#include "pathreg/error.hpp"

namespace pathreg {

std::string describe(const MatchingViolation& v, const Graph& g) {
  if (const auto* s = std::get_if<SharedVertex>(&v)) return "paths share vertex " + g.label(s->vertex);
  const auto& e = std::get<ExtraEdge>(v).edge;
  return "extra edge " + g.label(e.u) + "-" + g.label(e.v) + " inside the covered set";
}

std::optional<MatchingViolation> find_matching_violation(const Graph& g, const std::vector<Path3>& paths) {
  VertexSet covered;
  std::vector<Edge> own;
  for (const Path3& p : paths) {
    if (p.c >= g.vertex_count() || !g.has_edge(p.a, p.center) || !g.has_edge(p.center, p.c)) {
      throw InputError("(" + std::to_string(p.a) + "," + std::to_string(p.center) + "," + std::to_string(p.c) +
                       ") is not a 3-path of the graph");
    }
    const VertexSet shared = covered & p.vertices();
    if (!shared.empty()) return SharedVertex{shared.front()};
    covered |= p.vertices();
    own.emplace_back(p.a, p.center);
    own.emplace_back(p.center, p.c);
  }
  std::size_t twice = 0;
  for (Vertex v : covered) twice += (g.adjacency(v) & covered).size();
  if (twice / 2 == 2 * paths.size()) return std::nullopt;

  // Count mismatch: locate an edge that is not one of the paths' own edges.
  std::sort(own.begin(), own.end());
  for (Vertex u : covered) {
    for (Vertex v : g.adjacency(u) & covered) {
      if (u < v && !std::binary_search(own.begin(), own.end(), Edge(u, v))) return ExtraEdge{Edge(u, v)};
    }
  }
  return std::nullopt;
}

bool is_induced_3path_matching(const Graph& g, const std::vector<Path3>& paths) {
  return !find_matching_violation(g, paths).has_value();
}

namespace {

struct Candidate {
  Path3 path;
  VertexSet vertices;
  VertexSet closed;  // N[path]
};

class Nu3Search {
 public:
  explicit Nu3Search(const Graph& g) {
    for (const Path3& p : enumerate_3paths(g)) {
      if (g.has_edge(p.a, p.c)) continue;  // a triangle is never induced
      candidates_.push_back({p, p.vertices(), closed_neighbors(g, p.vertices())});
    }
  }

  Nu3Result run() {
    std::vector<std::size_t> chosen;
    VertexSet all;
    for (const auto& c : candidates_) all |= c.vertices;
    search(0, all, chosen);
    Nu3Result r;
    r.value = best_.size();
    for (std::size_t idx : best_) {
      r.certificate.paths.push_back(candidates_[idx].path);
      r.certificate.covered |= candidates_[idx].vertices;
    }
    return r;
  }

 private:
  // `free` holds vertices outside N[covered]; a path is addable iff it lies in free.
  void search(std::size_t from, VertexSet free, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (chosen.size() + free.size() / 3 <= best_.size()) return;

    std::size_t remaining = 0;
    VertexSet reachable;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      if (candidates_[i].vertices.subset_of(free)) {
        ++remaining;
        reachable |= candidates_[i].vertices;
      }
    }
    const std::size_t bound = std::min(remaining, reachable.size() / 3);
    if (chosen.size() + bound <= best_.size()) return;

    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const Candidate& c = candidates_[i];
      if (!c.vertices.subset_of(free)) continue;
      chosen.push_back(i);
      search(i + 1, free - c.closed, chosen);
      chosen.pop_back();
    }
  }

  std::vector<Candidate> candidates_;
  std::vector<std::size_t> best_;
};

}  // namespace

Nu3Result nu3(const Graph& g) { return Nu3Search(g).run(); }

MonotoneCheck check_nu3_monotone(const Graph& g, VertexSet w) {
  MonotoneCheck out;
  out.nu3_sub = nu3(induced_subgraph(g, w).graph).value;
  out.nu3_graph = nu3(g).value;
  out.holds = out.nu3_sub <= out.nu3_graph;
  return out;
}

BroomDropCheck check_broom_drop(const Graph& g) {
  const BroomVertex broom = find_broom_vertex(g);
  BroomDropCheck out;
  out.edge = Edge(broom.v, broom.last());
  out.nu3_rest = nu3(delete_vertices(g, closed_edge_neighborhood(g, out.edge)).graph).value;
  out.nu3_graph = nu3(g).value;
  out.holds = out.nu3_rest + 1 <= out.nu3_graph;
  return out;
}

std::string certificate_json(const Nu3Result& r) {
  nlohmann::ordered_json doc;
  doc["nu3"] = r.value;
  auto paths = nlohmann::ordered_json::array();
  for (const Path3& p : r.certificate.paths) paths.push_back({p.a, p.center, p.c});
  doc["paths"] = std::move(paths);
  return doc.dump();
}

}  // namespace pathreg
