// pathreg: command-line front end for 3-path ideals, their Betti tables and
// regularity, the 3-path induced matching number, and the verification batches.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathreg/betti.hpp"
#include "pathreg/error.hpp"
#include "pathreg/graph_io.hpp"
#include "pathreg/harness.hpp"
#include "pathreg/ideal.hpp"
#include "pathreg/matching.hpp"

namespace {

using namespace pathreg;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

struct EngineFlags {
  std::string field = "gf2";
  std::size_t max_vars = 0;  // 0: default cap
  bool allow_large = false;
  std::size_t threads = 1;

  BettiOptions betti() const {
    BettiOptions o;
    if (max_vars != 0) {
      if (max_vars > default_max_vars() && !allow_large) {
        throw InputError("--max-vars above " + std::to_string(default_max_vars()) +
                         " needs --allow-large (enumeration is exponential in the variable count)");
      }
      o.max_vars = max_vars;
    }
    return o;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f) {
  cmd->add_option("--field", f.field, "coefficient field: gf2, gf<p> or q")->capture_default_str();
  cmd->add_option("--max-vars", f.max_vars, "raise the variable cap for exhaustive enumeration");
  cmd->add_flag("--allow-large", f.allow_large, "acknowledge a --max-vars value above the default cap");
  cmd->add_option("--threads", f.threads, "worker threads")->capture_default_str();
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("bad vertex-count range '" + text + "' (use a..b or a single value)");
  }
}

Graph load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  return read_graph_file(path);
}

std::string path_text(const Graph& g, const std::vector<Vertex>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "-" : "") + g.label(path[i]);
  return out;
}

int cmd_paths(const std::string& input, int t, const std::string& format) {
  const Graph g = load(input);
  const auto paths = enumerate_t_paths(g, t);
  const MonomialIdeal ideal = path_ideal(g, t);
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["t"] = t;
    doc["paths"] = paths;
    doc["generators"] = ideal.generator_count();
    std::cout << doc.dump() << '\n';
    return kExitOk;
  }
  for (const auto& p : paths) std::cout << path_text(g, p) << '\n';
  std::cout << paths.size() << " paths, I_" << t << " has " << ideal.generator_count() << " minimal generators\n";
  return kExitOk;
}

int cmd_ideal(const std::string& input, int t, const std::string& format) {
  const Graph g = load(input);
  const MonomialIdeal ideal = path_ideal(g, t);
  std::cout << (format == "json" ? to_json(ideal) + "\n" : to_text(ideal, g.labels()));
  return kExitOk;
}

int cmd_reg(const std::string& input, const EngineFlags& flags, const std::string& format) {
  const Graph g = load(input);
  const FieldSpec field = FieldSpec::parse(flags.field);
  BettiOptions opts = flags.betti();
  opts.threads = flags.threads;
  const MonomialIdeal ideal = path_ideal(g, 3);
  const BettiTable table = betti_hochster(ideal, field, opts);
  if (format == "json") {
    std::cout << betti_json(table, field) << '\n';
  } else if (format == "csv") {
    std::cout << betti_csv(table);
  } else {
    std::cout << "reg " << table.regularity() << '\n'
              << "pd " << table.projective_dimension() << '\n'
              << "field " << field.name() << '\n'
              << betti_pretty(table);
  }
  return kExitOk;
}

int cmd_nu3(const std::string& input, const std::string& format) {
  const Graph g = load(input);
  const Nu3Result r = nu3(g);
  if (format == "json") {
    std::cout << certificate_json(r) << '\n';
    return kExitOk;
  }
  std::cout << "nu3 " << r.value << '\n';
  for (const Path3& p : r.certificate.paths) std::cout << path_text(g, {p.a, p.center, p.c}) << '\n';
  return kExitOk;
}

struct BatchFlags {
  std::string family;
  std::string n_range = "4..12";
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::vector<double> p{0.3};
  bool timings = false;
  std::string recheck_field;
};

void add_batch_flags(CLI::App* cmd, BatchFlags& b) {
  cmd->add_option("--family", b.family, "generator family: tree, unicyclic or random");
  cmd->add_option("--n", b.n_range, "vertex-count range a..b")->capture_default_str();
  cmd->add_option("--count", b.count, "number of instances")->capture_default_str();
  cmd->add_option("--seed", b.seed, "base seed; instance i uses seed + i")->capture_default_str();
  cmd->add_option("--p", b.p, "edge probabilities for the random family, cycled by instance");
  cmd->add_option("--recheck-field", b.recheck_field, "rerun failing instances over this field (e.g. q)");
  cmd->add_flag("--timings", b.timings, "record per-instance wall time (output is then not reproducible)");
}

BatchConfig make_batch(const BatchFlags& b, const EngineFlags& e, Which which) {
  BatchConfig cfg;
  cfg.family = parse_family(b.family);
  std::tie(cfg.n_min, cfg.n_max) = parse_range(b.n_range);
  cfg.count = b.count;
  cfg.seed = b.seed;
  cfg.edge_probabilities = b.p;
  cfg.which = which;
  cfg.harness.field = FieldSpec::parse(e.field);
  cfg.harness.betti = e.betti();
  cfg.threads = e.threads;
  cfg.record_timings = b.timings;
  if (!b.recheck_field.empty()) cfg.recheck_field = FieldSpec::parse(b.recheck_field);
  std::cerr << "# batch " << describe(cfg) << '\n';
  return cfg;
}

void report_failure(const VerificationReport& r, const BatchConfig* cfg) {
  for (const Check& c : r.checks) {
    if (!c.pass) std::cerr << "FAIL " << r.id << ": " << c.name << " " << c.details << '\n';
  }
  if (cfg != nullptr && r.seed) {
    // Instance i of the batch is instance 0 of a one-element batch with seed + i.
    const std::size_t index = static_cast<std::size_t>(*r.seed - cfg->seed);
    std::cerr << "  reproduce: pathreg verify --family " << r.family << " --which " << to_string(cfg->which) << " --n "
              << r.graph.vertex_count() << " --count 1 --seed " << *r.seed;
    if (cfg->family == Family::random) {
      std::cerr << " --p " << cfg->edge_probabilities[index % cfg->edge_probabilities.size()];
    }
    if (cfg->harness.field != FieldSpec::gf2()) std::cerr << " --field " << cfg->harness.field.name();
    std::cerr << '\n';
  }
  std::cerr << "  graph: " << to_graph_json(r.graph) << '\n';
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format, const BatchConfig* cfg) {
  if (format == "csv") std::cout << csv_header() << '\n';
  std::size_t failed = 0;
  for (const auto& r : reports) {
    std::cout << (format == "csv" ? to_csv_row(r) : to_json_line(r)) << '\n';
    if (!r.passed()) {
      ++failed;
      report_failure(r, cfg);
    }
  }
  std::cerr << reports.size() - failed << "/" << reports.size() << " instances passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::optional<std::string>& input, const std::string& which_name, const BatchFlags& b,
               const EngineFlags& e, const std::string& format) {
  const Which which = parse_which(which_name);
  if (input.has_value() == !b.family.empty()) throw InputError("give exactly one of an input file or --family");
  if (input) {
    HarnessOptions opt;
    opt.field = FieldSpec::parse(e.field);
    opt.betti = e.betti();
    VerificationReport r = verify_graph(load(*input), which, opt);
    r.id = *input;
    r.family = "file";
    return emit_reports({r}, format, nullptr);
  }
  const BatchConfig cfg = make_batch(b, e, which);
  return emit_reports(run_batch(cfg), format, &cfg);
}

int cmd_search(const BatchFlags& b, const EngineFlags& e, const std::optional<std::string>& out_dir) {
  if (b.family.empty()) throw InputError("search needs --family");
  const BatchConfig cfg = make_batch(b, e, Which::all);
  std::optional<std::filesystem::path> dir;
  if (out_dir) dir = *out_dir;
  const DefectSummary s = classify_defects(cfg, dir);
  const std::string csv = histogram_csv(s, cfg.family);
  std::cout << csv;
  if (dir) {
    std::ofstream(*dir / "histogram.csv") << csv;
    std::ofstream summary(*dir / "summary.csv");
    summary << csv_header() << '\n';
    for (const auto& r : s.reports) summary << to_csv_row(r) << '\n';
  }
  for (const auto& r : s.reports) {
    if (!r.passed()) report_failure(r, &cfg);
  }
  std::cerr << s.reports.size() << " instances, " << s.failures << " failed\n";
  return s.failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-path ideals of graphs: Betti tables, regularity and induced matchings"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> opt_input;
  std::optional<std::string> out_dir;
  std::string format = "text";
  std::string report_format = "jsonl";
  std::string which = "all";
  int t = 3;
  EngineFlags engine;
  BatchFlags batch;

  auto* paths = app.add_subcommand("paths", "list the t-paths of a graph");
  paths->add_option("--t", t, "path size in vertices (2 or 3)")->capture_default_str();
  paths->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  paths->add_option("input", input, "graph file (edge list or JSON, - for stdin)")->required();

  auto* ideal = app.add_subcommand("ideal", "print the minimal generators of I_t(G)");
  ideal->add_option("--t", t, "path size in vertices (2 or 3)")->capture_default_str();
  ideal->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  ideal->add_option("input", input, "graph file")->required();

  auto* reg = app.add_subcommand("reg", "Betti table and regularity of R/I_3(G)");
  add_engine_flags(reg, engine);
  reg->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  reg->add_option("input", input, "graph file")->required();

  auto* nu = app.add_subcommand("nu3", "3-path induced matching number with a certificate");
  nu->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  nu->add_option("input", input, "graph file")->required();

  auto* verify = app.add_subcommand("verify", "check the regularity bounds and identities");
  verify->add_option("--which", which,
                     "all, lower, tree, unicyclic, colon (alias lemma41), restriction (alias prop31), ses, broom")
      ->capture_default_str();
  verify->add_option("--format", report_format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  add_engine_flags(verify, engine);
  add_batch_flags(verify, batch);
  verify->add_option("input", opt_input, "graph file (instead of --family)");

  auto* search = app.add_subcommand("search", "defect histogram reg - 2 nu3 over a random family");
  add_engine_flags(search, engine);
  add_batch_flags(search, batch);
  search->add_option("--out", out_dir, "directory for histogram.csv, summary.csv and exemplar edge lists");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*paths) return cmd_paths(input, t, format);
    if (*ideal) return cmd_ideal(input, t, format);
    if (*reg) return cmd_reg(input, engine, format);
    if (*nu) return cmd_nu3(input, format);
    if (*verify) return cmd_verify(opt_input, which, batch, engine, report_format);
    if (*search) return cmd_search(batch, engine, out_dir);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotFoundError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
