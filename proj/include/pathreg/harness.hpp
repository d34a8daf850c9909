#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathreg/betti.hpp"
#include "pathreg/field.hpp"
#include "pathreg/graph.hpp"

namespace pathreg {

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Outcome of verifying one graph. `defect` = reg - 2 nu3 is set only when
/// both were computed. The serialized graph plus seed reproduce any failure.
struct VerificationReport {
  std::string id;
  std::string family;
  std::optional<std::uint64_t> seed;
  Graph graph;
  GraphClass classification = GraphClass::other;
  std::optional<int> reg;
  std::optional<std::size_t> nu3;
  std::optional<int> defect;
  std::vector<Check> checks;
  std::optional<double> elapsed_ms;

  bool passed() const;
  void add(std::string name, bool pass, std::string details);
};

/// One JSON object per report, keys in a fixed order.
std::string to_json_line(const VerificationReport& r);
std::string csv_header();
/// n,family,seed,reg,nu3,defect,pass
std::string to_csv_row(const VerificationReport& r);

struct HarnessOptions {
  FieldSpec field = FieldSpec::gf2();
  BettiOptions betti{};
};

/// reg(R/I_3(G)) >= 2 nu3(G), any graph.
VerificationReport verify_lower_bound(const Graph& g, const HarnessOptions& opt = {});
/// reg(R/I_3(G)) == 2 nu3(G); G must be a tree or forest (InputError otherwise).
VerificationReport verify_tree_equality(const Graph& g, const HarnessOptions& opt = {});
/// 2 nu3 <= reg <= 2 nu3 + 2; G must be connected unicyclic and not a cycle.
VerificationReport verify_unicyclic_sandwich(const Graph& g, const HarnessOptions& opt = {});
/// Entrywise beta(R_H/I_3(H)) <= beta(R/I_3(G)) for H = G[W], plus the
/// regularity consequence.
VerificationReport verify_betti_monotonicity(const Graph& g, VertexSet w, const HarnessOptions& opt = {});
/// I_3(G):xy == <N(e)> + I_3(G - N[e]) and, for both orientations,
/// (I_3(G) + <xy>):x == <y> + I_2(H) + I_3(G - N[x]).
VerificationReport verify_colon_identities(const Graph& g, Edge e);
/// The short-exact-sequence regularity bound for I_3(G) and m = xy, every edge.
VerificationReport verify_ses_edges(const Graph& g, const HarnessOptions& opt = {});
/// nu3(G - N[e]) <= nu3(G) - 1 for the broom edge of a tree.
VerificationReport verify_broom_drop(const Graph& g);

enum class Family { tree, unicyclic, random };
enum class Which { all, lower, tree, unicyclic, colon, restriction, ses, broom };

std::string to_string(Family f);
std::string to_string(Which w);
/// Accepts the names printed by to_string plus "lemma41" (colon) and "prop31" (restriction).
Which parse_which(const std::string& s);
Family parse_family(const std::string& s);

/// The checks selected by `which` that apply to g, merged into one report.
/// `rng_seed` drives the random vertex subset for the restriction check when
/// set; otherwise every single-vertex deletion is used.
VerificationReport verify_graph(const Graph& g, Which which, const HarnessOptions& opt,
                                std::optional<std::uint64_t> rng_seed = std::nullopt);

struct BatchConfig {
  Family family = Family::tree;
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  /// Edge probabilities for the random family, cycled by instance index.
  std::vector<double> edge_probabilities{0.3};
  /// Which::all means the family's natural check.
  Which which = Which::all;
  HarnessOptions harness{};
  std::size_t threads = 1;
  bool record_timings = false;
  /// When set, a failing instance is rerun over this field and the outcome is
  /// attached as an extra check, to separate characteristic effects from bugs.
  std::optional<FieldSpec> recheck_field;
};

/// One-line description of the batch parameters, e.g. for a report header.
std::string describe(const BatchConfig& config);

/// Instance i uses seed + i, vertex count n_min + i mod (n_max - n_min + 1) and
/// edge probability edge_probabilities[i mod size]. Unicyclic draws are redrawn
/// from the same stream while they come out as a bare cycle; checks that need
/// an edge redraw while the graph is edgeless. Results are ordered by index and
/// independent of `threads`.
std::vector<VerificationReport> run_batch(const BatchConfig& config);

/// Graph of instance i exactly as run_batch builds it, plus the generator
/// stream positioned for the instance's random choices.
Graph batch_instance_graph(const BatchConfig& config, std::size_t index);

struct DefectSummary {
  std::map<int, std::size_t> histogram;
  /// First instance index seen for each (n, defect) cell.
  std::map<std::pair<std::size_t, int>, std::size_t> exemplars;
  std::size_t failures = 0;
  std::vector<VerificationReport> reports;
};

/// Runs the family's verifier on every instance and tallies reg - 2 nu3.
/// Writes `<family>_n<k>_defect<d>.txt` edge lists when exemplar_dir is given.
DefectSummary classify_defects(const BatchConfig& config,
                               const std::optional<std::filesystem::path>& exemplar_dir = std::nullopt);

std::string histogram_csv(const DefectSummary& s, Family family);

}  // namespace pathreg
