#include "pathreg/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pathreg/error.hpp"

namespace pathreg {

Graph parse_edge_list(std::string_view text) {
  GraphBuilder builder;
  std::map<std::string, Vertex, std::less<>> ids;
  auto id_of = [&](const std::string& token) {
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    const Vertex v = builder.add_vertex(token);
    ids.emplace(token, v);
    return v;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    try {
      if (tokens.size() == 1) {
        id_of(tokens[0]);
      } else if (tokens.size() == 2) {
        if (tokens[0] == tokens[1]) throw InputError("self-loop on '" + tokens[0] + "'");
        const Vertex u = id_of(tokens[0]);
        const Vertex v = id_of(tokens[1]);
        builder.add_edge(u, v);
      } else {
        throw InputError("expected \"u v\", found " + std::to_string(tokens.size()) + " tokens");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return std::move(builder).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  VertexSet touched;
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    touched |= e.vertices();
  }
  for (Vertex v : g.vertices() - touched) out << g.label(v) << '\n';
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid graph JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (pair.size() != 2) throw InputError("each edge must be a pair [u, v]");
      const auto u = pair[0].get<Vertex>();
      const auto v = pair[1].get<Vertex>();
      if (u >= n || v >= n) throw InputError("edge endpoint out of range");
      edges.emplace_back(u, v);
    }
    return Graph(n, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string to_graph_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (g.has_labels()) doc["labels"] = g.labels();
  return doc.dump();
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace pathreg
