#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pathreg/graph.hpp"

namespace pathreg {

/// Edge-list text: one "u v" pair per line, `#` starts a comment, blank lines
/// are skipped. Tokens are arbitrary and map to ids in first-appearance order.
/// A line holding a single token declares an isolated vertex.
/// Throws InputError naming the offending line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// JSON: {"n": int, "edges": [[u,v],...], "labels": [...]} with "labels" optional.
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

/// Picks JSON when the first non-blank character is '{', edge-list otherwise.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace pathreg
