#include "pathreg/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pathreg/error.hpp"
#include "pathreg/generators.hpp"
#include "pathreg/graph_io.hpp"
#include "pathreg/ideal.hpp"
#include "pathreg/matching.hpp"

namespace pathreg {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string details) {
  checks.push_back({std::move(name), pass, std::move(details)});
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json doc;
  doc["id"] = r.id;
  doc["family"] = r.family;
  doc["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  doc["n"] = r.graph.vertex_count();
  doc["graph"] = nlohmann::ordered_json::parse(to_graph_json(r.graph));
  doc["class"] = to_string(r.classification);
  doc["reg"] = r.reg ? nlohmann::ordered_json(*r.reg) : nlohmann::ordered_json(nullptr);
  doc["nu3"] = r.nu3 ? nlohmann::ordered_json(*r.nu3) : nlohmann::ordered_json(nullptr);
  doc["defect"] = r.defect ? nlohmann::ordered_json(*r.defect) : nlohmann::ordered_json(nullptr);
  doc["pass"] = r.passed();
  auto checks = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["details"] = c.details;
    checks.push_back(std::move(item));
  }
  doc["checks"] = std::move(checks);
  if (r.elapsed_ms) doc["ms"] = *r.elapsed_ms;
  return doc.dump();
}

std::string csv_header() { return "n,family,seed,reg,nu3,defect,pass"; }

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << r.graph.vertex_count() << ',' << r.family << ',' << (r.seed ? std::to_string(*r.seed) : "") << ','
      << (r.reg ? std::to_string(*r.reg) : "") << ',' << (r.nu3 ? std::to_string(*r.nu3) : "") << ','
      << (r.defect ? std::to_string(*r.defect) : "") << ',' << (r.passed() ? "true" : "false");
  return out.str();
}

namespace {

VerificationReport base_report(const Graph& g) {
  VerificationReport r;
  r.graph = g;
  r.classification = classify(g).kind;
  return r;
}

void compute_invariants(VerificationReport& r, const HarnessOptions& opt) {
  if (!r.reg) r.reg = regularity(path_ideal(r.graph, 3), opt.field, opt.betti).value();
  if (!r.nu3) r.nu3 = nu3(r.graph).value;
  r.defect = *r.reg - 2 * static_cast<int>(*r.nu3);
}

std::string reg_nu3_details(const VerificationReport& r) {
  return "reg=" + std::to_string(*r.reg) + " nu3=" + std::to_string(*r.nu3);
}

void merge(VerificationReport& into, const VerificationReport& from) {
  if (!into.reg && from.reg) into.reg = from.reg;
  if (!into.nu3 && from.nu3) into.nu3 = from.nu3;
  if (into.reg && into.nu3) into.defect = *into.reg - 2 * static_cast<int>(*into.nu3);
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

std::string edge_name(const Graph& g, Edge e) { return g.label(e.u) + g.label(e.v); }

bool has_broom_vertex(const Graph& g) {
  if (!is_acyclic(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (is_broom_vertex(g, v)) return true;
  }
  return false;
}

}  // namespace

VerificationReport verify_lower_bound(const Graph& g, const HarnessOptions& opt) {
  VerificationReport r = base_report(g);
  compute_invariants(r, opt);
  r.add("lower_bound", *r.reg >= 2 * static_cast<int>(*r.nu3), reg_nu3_details(r) + " (reg >= 2 nu3)");
  return r;
}

VerificationReport verify_tree_equality(const Graph& g, const HarnessOptions& opt) {
  if (!is_acyclic(g)) throw InputError("tree equality needs a tree or forest (got " + to_string(classify(g).kind) + ")");
  VerificationReport r = base_report(g);
  compute_invariants(r, opt);
  r.add("tree_equality", *r.reg == 2 * static_cast<int>(*r.nu3), reg_nu3_details(r) + " (reg == 2 nu3)");
  return r;
}

VerificationReport verify_unicyclic_sandwich(const Graph& g, const HarnessOptions& opt) {
  const GraphClass kind = classify(g).kind;
  if (kind != GraphClass::unicyclic) {
    throw InputError("unicyclic bounds need a connected non-cycle unicyclic graph (got " + to_string(kind) + ")");
  }
  VerificationReport r = base_report(g);
  compute_invariants(r, opt);
  const int twice = 2 * static_cast<int>(*r.nu3);
  r.add("unicyclic_lower", *r.reg >= twice, reg_nu3_details(r) + " (reg >= 2 nu3)");
  r.add("unicyclic_upper", *r.reg <= twice + 2, reg_nu3_details(r) + " (reg <= 2 nu3 + 2)");
  return r;
}

VerificationReport verify_betti_monotonicity(const Graph& g, VertexSet w, const HarnessOptions& opt) {
  VerificationReport r = base_report(g);
  const InducedSubgraph sub = induced_subgraph(g, w);
  const MonomialIdeal whole = path_ideal(g, 3);
  const MonomialIdeal part = path_ideal(sub.graph, 3);
  const BettiTable big = betti_hochster(whole, opt.field, opt.betti);
  const BettiTable small = betti_hochster(part, opt.field, opt.betti);
  r.reg = big.regularity();

  std::ostringstream where;
  where << "W={";
  bool first = true;
  for (Vertex v : w) {
    where << (first ? "" : ",") << g.label(v);
    first = false;
  }
  where << "}";
  r.add("betti_restriction", small.entrywise_le(big), where.str() + " entrywise beta(H) <= beta(G)");
  r.add("reg_restriction", small.regularity() <= big.regularity(),
        where.str() + " reg(H)=" + std::to_string(small.regularity()) + " <= reg(G)=" + std::to_string(big.regularity()));
  return r;
}

VerificationReport verify_colon_identities(const Graph& g, Edge e) {
  VerificationReport r = base_report(g);
  const MonomialIdeal i3 = path_ideal(g, 3);
  const MonomialIdeal edge_ideal = MonomialIdeal(g.vertex_count(), {e.vertices()});

  const bool part1 = colon(i3, {e.vertices()}) == colon_by_edge_rhs(g, e);
  r.add("colon_by_edge", part1, "e=" + edge_name(g, e));

  for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    const MonomialIdeal lhs = colon(add(i3, edge_ideal), {VertexSet::singleton(x)});
    const bool ok = lhs == colon_after_edge_rhs(g, x, y);
    r.add("colon_after_edge", ok, "x=" + g.label(x) + " y=" + g.label(y));
  }
  return r;
}

VerificationReport verify_ses_edges(const Graph& g, const HarnessOptions& opt) {
  VerificationReport r = base_report(g);
  const MonomialIdeal i3 = path_ideal(g, 3);
  for (const Edge& e : g.edges()) {
    const SesBound b = verify_ses_bound(i3, {e.vertices()}, opt.field, opt.betti);
    if (!r.reg) r.reg = b.reg_ideal.value();
    r.add("ses_bound", b.holds,
          "m=" + edge_name(g, e) + " reg=" + b.reg_ideal.to_string() + " colon+deg=" + b.colon_term.to_string() +
              " sum=" + b.sum_term.to_string());
  }
  return r;
}

VerificationReport verify_broom_drop(const Graph& g) {
  VerificationReport r = base_report(g);
  const BroomDropCheck c = check_broom_drop(g);
  r.nu3 = c.nu3_graph;
  r.add("broom_drop", c.holds,
        "e=" + edge_name(g, c.edge) + " nu3(G-N[e])=" + std::to_string(c.nu3_rest) +
            " nu3(G)=" + std::to_string(c.nu3_graph));
  return r;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::tree: return "tree";
    case Family::unicyclic: return "unicyclic";
    case Family::random: return "random";
  }
  return "random";
}

std::string to_string(Which w) {
  switch (w) {
    case Which::all: return "all";
    case Which::lower: return "lower";
    case Which::tree: return "tree";
    case Which::unicyclic: return "unicyclic";
    case Which::colon: return "colon";
    case Which::restriction: return "restriction";
    case Which::ses: return "ses";
    case Which::broom: return "broom";
  }
  return "all";
}

Which parse_which(const std::string& s) {
  if (s == "lemma41") return Which::colon;
  if (s == "prop31") return Which::restriction;
  for (Which w : {Which::all, Which::lower, Which::tree, Which::unicyclic, Which::colon, Which::restriction, Which::ses,
                  Which::broom}) {
    if (to_string(w) == s) return w;
  }
  throw InputError("unknown check '" + s + "'");
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::tree, Family::unicyclic, Family::random}) {
    if (to_string(f) == s) return f;
  }
  throw InputError("unknown family '" + s + "' (tree, unicyclic, random)");
}

VerificationReport verify_graph(const Graph& g, Which which, const HarnessOptions& opt,
                                std::optional<std::uint64_t> rng_seed) {
  VerificationReport r = base_report(g);
  const bool acyclic = is_acyclic(g);
  const bool unicyclic = r.classification == GraphClass::unicyclic;

  auto restriction = [&] {
    if (rng_seed) {
      Rng rng(*rng_seed);
      merge(r, verify_betti_monotonicity(g, rng.subset(g.vertices()), opt));
      return;
    }
    merge(r, verify_betti_monotonicity(g, g.vertices(), opt));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      merge(r, verify_betti_monotonicity(g, g.vertices() - VertexSet::singleton(v), opt));
    }
  };
  auto colons = [&] {
    for (const Edge& e : g.edges()) merge(r, verify_colon_identities(g, e));
  };

  switch (which) {
    case Which::lower: merge(r, verify_lower_bound(g, opt)); break;
    case Which::tree: merge(r, verify_tree_equality(g, opt)); break;
    case Which::unicyclic: merge(r, verify_unicyclic_sandwich(g, opt)); break;
    case Which::colon: colons(); break;
    case Which::restriction: restriction(); break;
    case Which::ses: merge(r, verify_ses_edges(g, opt)); break;
    case Which::broom: merge(r, verify_broom_drop(g)); break;
    case Which::all:
      merge(r, verify_lower_bound(g, opt));
      if (acyclic) merge(r, verify_tree_equality(g, opt));
      if (unicyclic) merge(r, verify_unicyclic_sandwich(g, opt));
      colons();
      restriction();
      merge(r, verify_ses_edges(g, opt));
      if (has_broom_vertex(g)) merge(r, verify_broom_drop(g));
      break;
  }
  return r;
}

namespace {

struct Instance {
  Graph graph;
  Rng rng;
};

bool needs_edge(Which w) { return w == Which::colon || w == Which::ses; }

Instance make_instance(const BatchConfig& cfg, std::size_t index) {
  if (cfg.n_min > cfg.n_max) throw InputError("empty vertex-count range");
  const std::size_t span = cfg.n_max - cfg.n_min + 1;
  const std::size_t n = cfg.n_min + index % span;
  Instance inst{Graph(), Rng(cfg.seed + index)};
  auto draw = [&]() -> Graph {
    switch (cfg.family) {
      case Family::tree: return random_tree(n, inst.rng);
      case Family::unicyclic: return random_unicyclic(n, inst.rng);
      case Family::random:
        return random_graph(n, cfg.edge_probabilities[index % cfg.edge_probabilities.size()], inst.rng);
    }
    return Graph();
  };
  inst.graph = draw();
  if (cfg.family == Family::unicyclic) {
    while (classify(inst.graph).kind == GraphClass::cycle) inst.graph = draw();
  }
  if (needs_edge(cfg.which) && n >= 2) {
    while (inst.graph.edge_count() == 0) inst.graph = draw();
  }
  return inst;
}

void validate(const BatchConfig& cfg) {
  if (cfg.n_min > cfg.n_max) throw InputError("empty vertex-count range");
  if (cfg.edge_probabilities.empty()) throw InputError("no edge probability given");
  if (cfg.family == Family::unicyclic && cfg.n_min < 4) {
    throw InputError("non-cycle unicyclic graphs need n >= 4");
  }
  if (cfg.family == Family::tree && cfg.n_min < 1) throw InputError("trees need n >= 1");
}

Which natural_check(Family f) {
  switch (f) {
    case Family::tree: return Which::tree;
    case Family::unicyclic: return Which::unicyclic;
    case Family::random: return Which::lower;
  }
  return Which::lower;
}

VerificationReport run_instance(const BatchConfig& cfg, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  Instance inst = make_instance(cfg, index);
  const Graph& g = inst.graph;
  VerificationReport r;
  switch (cfg.which) {
    case Which::colon: {
      if (g.edge_count() == 0) {
        r = base_report(g);
        r.add("colon_by_edge", true, "no edge to test");
        break;
      }
      const auto edges = g.edges();
      r = verify_colon_identities(g, edges[inst.rng.below(edges.size())]);
      break;
    }
    case Which::restriction:
      r = verify_betti_monotonicity(g, inst.rng.subset(g.vertices()), cfg.harness);
      break;
    case Which::all:
      r = verify_graph(g, natural_check(cfg.family), cfg.harness);
      break;
    default:
      r = verify_graph(g, cfg.which, cfg.harness);
      break;
  }
  r.id = to_string(cfg.family) + "#" + std::to_string(index);
  r.family = to_string(cfg.family);
  r.seed = cfg.seed + index;
  if (cfg.record_timings) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

void recheck(const BatchConfig& config, std::size_t index, VerificationReport& r) {
  BatchConfig alt = config;
  alt.harness.field = *config.recheck_field;
  alt.recheck_field.reset();
  const VerificationReport again = run_instance(alt, index);
  std::string details = "field " + alt.harness.field.name() + ": ";
  details += again.reg ? "reg " + std::to_string(*again.reg) : "reg not computed";
  r.add("recheck_" + alt.harness.field.name(), again.passed(), details);
}

}  // namespace

std::string describe(const BatchConfig& config) {
  std::ostringstream out;
  out << "family=" << to_string(config.family) << " n=" << config.n_min << ".." << config.n_max
      << " count=" << config.count << " seed=" << config.seed << " which=" << to_string(config.which)
      << " field=" << config.harness.field.name();
  if (config.family == Family::random) {
    out << " p=";
    for (std::size_t i = 0; i < config.edge_probabilities.size(); ++i) {
      out << (i ? "," : "") << config.edge_probabilities[i];
    }
  }
  return out.str();
}

Graph batch_instance_graph(const BatchConfig& config, std::size_t index) {
  validate(config);
  return make_instance(config, index).graph;
}

std::vector<VerificationReport> run_batch(const BatchConfig& config) {
  validate(config);
  std::vector<VerificationReport> out(config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      try {
        out[i] = run_instance(config, i);
        if (config.recheck_field && !out[i].passed()) recheck(config, i, out[i]);
      } catch (const std::exception& e) {
        VerificationReport r;
        r.id = to_string(config.family) + "#" + std::to_string(i);
        r.family = to_string(config.family);
        r.seed = config.seed + i;
        r.graph = batch_instance_graph(config, i);
        r.classification = classify(r.graph).kind;
        r.add("error", false, e.what());
        out[i] = std::move(r);
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

DefectSummary classify_defects(const BatchConfig& config, const std::optional<std::filesystem::path>& exemplar_dir) {
  BatchConfig cfg = config;
  cfg.which = Which::all;
  DefectSummary s;
  s.reports = run_batch(cfg);
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    const auto& r = s.reports[i];
    if (!r.passed()) ++s.failures;
    if (!r.defect) continue;
    ++s.histogram[*r.defect];
    s.exemplars.try_emplace({r.graph.vertex_count(), *r.defect}, i);
  }
  if (exemplar_dir) {
    std::filesystem::create_directories(*exemplar_dir);
    for (const auto& [cell, idx] : s.exemplars) {
      const auto file = *exemplar_dir / (to_string(config.family) + "_n" + std::to_string(cell.first) + "_defect" +
                                         std::to_string(cell.second) + ".txt");
      std::ofstream out(file);
      out << "# " << s.reports[idx].id << " seed " << *s.reports[idx].seed << "\n";
      out << to_edge_list(s.reports[idx].graph);
    }
  }
  return s;
}

std::string histogram_csv(const DefectSummary& s, Family family) {
  std::ostringstream out;
  out << "family,defect,count\n";
  for (const auto& [defect, count] : s.histogram) out << to_string(family) << ',' << defect << ',' << count << '\n';
  return out.str();
}

}  // namespace pathreg
