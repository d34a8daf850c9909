#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pathreg/graph.hpp"
#include "pathreg/vertex_set.hpp"

namespace pathreg {

/// x^S for a vertex set S. Divisibility is support containment.
struct SquarefreeMonomial {
  VertexSet support;

  std::size_t degree() const { return support.size(); }
  bool divides(SquarefreeMonomial other) const { return support.subset_of(other.support); }
  bool is_one() const { return support.empty(); }

  SquarefreeMonomial operator*(SquarefreeMonomial o) const { return {support | o.support}; }
  bool operator==(const SquarefreeMonomial&) const = default;
  auto operator<=>(const SquarefreeMonomial&) const = default;
};

/// Squarefree monomial ideal in variables x_0..x_{n-1}, held by its minimal
/// generating set (an antichain under divisibility, sorted by support mask).
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`; throws InputError if any support leaves {0..n-1}.
  MonomialIdeal(std::size_t ambient, std::vector<VertexSet> gens);

  static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient, {}); }
  static MonomialIdeal unit(std::size_t ambient) { return MonomialIdeal(ambient, {VertexSet{}}); }
  /// The ideal generated by the variables in s.
  static MonomialIdeal variables(std::size_t ambient, VertexSet s);

  std::size_t ambient() const { return ambient_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
  bool contains(SquarefreeMonomial m) const;
  /// Union of all generator supports.
  VertexSet support() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<VertexSet> gens_;
};

/// Drops every support that strictly contains another (and duplicates), then sorts.
std::vector<VertexSet> minimalize(std::span<const VertexSet> gens);

/// I_t(G) for t in {2, 3}, ambient V(G).
MonomialIdeal path_ideal(const Graph& g, int t);

/// (I : m) = < g - m : g in gens(I) >, minimalized.
MonomialIdeal colon(const MonomialIdeal& ideal, SquarefreeMonomial m);
MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
/// <S> + I.
MonomialIdeal add_vars(const MonomialIdeal& ideal, VertexSet s);

/// Moves an ideal living on the vertices of an induced subgraph into the
/// parent ambient (local id i becomes to_parent[i]).
MonomialIdeal lift_ideal(const MonomialIdeal& local, const InducedSubgraph& sub, std::size_t parent_ambient);
/// Restricts to variables in w and renumbers them 0..|w|-1 in increasing order.
/// Every generator must lie inside w.
MonomialIdeal reambient(const MonomialIdeal& ideal, VertexSet w);

/// <N(e)> + I_3(G - N[e]) built from the graph, ambient V(G).
MonomialIdeal colon_by_edge_rhs(const Graph& g, Edge e);
/// <y> + I_2(H) + I_3(G - N[x]) where H joins the neighbourhood edge set of x
/// with the complete graph on N(x) - y. Ambient V(G).
MonomialIdeal colon_after_edge_rhs(const Graph& g, Vertex x, Vertex y);

/// One generator per line, variables joined by '*' (e.g. "x1*x2*x3"); "1" for
/// the unit generator. `labels` name the variables (default "x<id>").
std::string to_text(const MonomialIdeal& ideal, const std::vector<std::string>& labels = {});
/// Inverse of to_text for the given labels; blank input is the zero ideal.
MonomialIdeal parse_ideal_text(const std::string& text, std::size_t ambient,
                               const std::vector<std::string>& labels = {});
/// JSON list of sorted vertex-id lists.
std::string to_json(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal_json(const std::string& text, std::size_t ambient);

}  // namespace pathreg
