#include "pathreg/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pathreg/error.hpp"

namespace pathreg {

std::vector<VertexSet> minimalize(std::span<const VertexSet> gens) {
  std::vector<VertexSet> sorted(gens.begin(), gens.end());
  // Smaller supports first, so every potential divisor is seen before its multiples.
  std::sort(sorted.begin(), sorted.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexSet> kept;
  for (VertexSet g : sorted) {
    const bool divisible = std::any_of(kept.begin(), kept.end(), [g](VertexSet k) { return k.subset_of(g); });
    if (!divisible) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t ambient, std::vector<VertexSet> gens) : ambient_(ambient) {
  if (ambient > kMaxVertices) throw InputError("ambient exceeds " + std::to_string(kMaxVertices) + " variables");
  const VertexSet all = VertexSet::range(ambient);
  for (VertexSet g : gens) {
    if (!g.subset_of(all)) throw InputError("generator uses a variable outside the ambient ring");
  }
  gens_ = minimalize(gens);
}

MonomialIdeal MonomialIdeal::variables(std::size_t ambient, VertexSet s) {
  std::vector<VertexSet> gens;
  for (Vertex v : s) gens.push_back(VertexSet::singleton(v));
  return MonomialIdeal(ambient, std::move(gens));
}

bool MonomialIdeal::contains(SquarefreeMonomial m) const {
  return std::any_of(gens_.begin(), gens_.end(), [m](VertexSet g) { return g.subset_of(m.support); });
}

VertexSet MonomialIdeal::support() const {
  VertexSet out;
  for (VertexSet g : gens_) out |= g;
  return out;
}

MonomialIdeal path_ideal(const Graph& g, int t) {
  std::vector<VertexSet> gens;
  for (const auto& path : enumerate_t_paths(g, t)) {
    VertexSet s;
    for (Vertex v : path) s.insert(v);
    gens.push_back(s);
  }
  return MonomialIdeal(g.vertex_count(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, SquarefreeMonomial m) {
  std::vector<VertexSet> gens;
  gens.reserve(ideal.generator_count());
  for (VertexSet g : ideal.generators()) gens.push_back(g - m.support);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw InputError("cannot add ideals over different ambient rings");
  std::vector<VertexSet> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal add_vars(const MonomialIdeal& ideal, VertexSet s) {
  return add(ideal, MonomialIdeal::variables(ideal.ambient(), s));
}

MonomialIdeal lift_ideal(const MonomialIdeal& local, const InducedSubgraph& sub, std::size_t parent_ambient) {
  std::vector<VertexSet> gens;
  for (VertexSet g : local.generators()) gens.push_back(sub.lift(g));
  return MonomialIdeal(parent_ambient, std::move(gens));
}

MonomialIdeal reambient(const MonomialIdeal& ideal, VertexSet w) {
  std::vector<Vertex> local(ideal.ambient(), 0);
  Vertex next = 0;
  for (Vertex v : w) local.at(v) = next++;
  std::vector<VertexSet> gens;
  for (VertexSet g : ideal.generators()) {
    if (!g.subset_of(w)) throw InputError("generator not supported on the target variable set");
    VertexSet mapped;
    for (Vertex v : g) mapped.insert(local[v]);
    gens.push_back(mapped);
  }
  return MonomialIdeal(w.size(), std::move(gens));
}

MonomialIdeal colon_by_edge_rhs(const Graph& g, Edge e) {
  const VertexSet ne = edge_neighborhood(g, e);
  const InducedSubgraph rest = delete_vertices(g, ne | e.vertices());
  const MonomialIdeal j = lift_ideal(path_ideal(rest.graph, 3), rest, g.vertex_count());
  return add_vars(j, ne);
}

MonomialIdeal colon_after_edge_rhs(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) {
    throw InputError("{" + std::to_string(x) + "," + std::to_string(y) + "} is not an edge");
  }
  std::vector<VertexSet> gens;
  gens.push_back(VertexSet::singleton(y));
  for (const Edge& e : neighborhood_edge_set(g, x)) gens.push_back(e.vertices());
  const auto clique = (g.adjacency(x) - VertexSet::singleton(y)).to_vector();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) gens.push_back(VertexSet{clique[i], clique[j]});
  }
  const InducedSubgraph rest = delete_vertices(g, closed_neighbors(g, x));
  const MonomialIdeal far = lift_ideal(path_ideal(rest.graph, 3), rest, g.vertex_count());
  gens.insert(gens.end(), far.generators().begin(), far.generators().end());
  return MonomialIdeal(g.vertex_count(), std::move(gens));
}

namespace {

std::string var_name(Vertex v, const std::vector<std::string>& labels) {
  return labels.empty() ? "x" + std::to_string(v) : labels.at(v);
}

}  // namespace

std::string to_text(const MonomialIdeal& ideal, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (VertexSet g : ideal.generators()) {
    if (g.empty()) {
      out << "1\n";
      continue;
    }
    bool first = true;
    for (Vertex v : g) {
      out << (first ? "" : "*") << var_name(v, labels);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal_text(const std::string& text, std::size_t ambient, const std::vector<std::string>& labels) {
  std::map<std::string, Vertex, std::less<>> ids;
  for (Vertex v = 0; v < ambient; ++v) ids.emplace(var_name(v, labels), v);

  std::vector<VertexSet> gens;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    if (line == "1") {
      gens.emplace_back();
      continue;
    }
    VertexSet g;
    std::istringstream factors(line);
    for (std::string tok; std::getline(factors, tok, '*');) {
      auto it = ids.find(tok);
      if (it == ids.end()) {
        throw InputError("line " + std::to_string(line_no) + ": unknown variable '" + tok + "'");
      }
      g.insert(it->second);
    }
    gens.push_back(g);
  }
  return MonomialIdeal(ambient, std::move(gens));
}

std::string to_json(const MonomialIdeal& ideal) {
  auto doc = nlohmann::json::array();
  for (VertexSet g : ideal.generators()) doc.push_back(g.to_vector());
  return doc.dump();
}

MonomialIdeal parse_ideal_json(const std::string& text, std::size_t ambient) {
  try {
    std::vector<VertexSet> gens;
    for (const auto& row : nlohmann::json::parse(text)) {
      VertexSet g;
      for (const auto& v : row) {
        const auto id = v.get<Vertex>();
        if (id >= ambient) throw InputError("variable id out of range");
        g.insert(id);
      }
      gens.push_back(g);
    }
    return MonomialIdeal(ambient, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ideal JSON: ") + e.what());
  }
}

}  // namespace pathreg
