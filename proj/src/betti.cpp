#include "pathreg/betti.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pathreg/complex.hpp"
#include "pathreg/error.hpp"

namespace pathreg {

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count != 0) entries_[{i, j}] += count;
}

int BettiTable::regularity() const {
  int reg = 0;
  bool any = false;
  for (const auto& [key, b] : entries_) {
    reg = any ? std::max(reg, key.second - key.first) : key.second - key.first;
    any = true;
  }
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, b] : entries_) pd = std::max(pd, key.first);
  return pd;
}

bool BettiTable::entrywise_le(const BettiTable& other) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& kv) { return kv.second <= other.at(kv.first.first, kv.first.second); });
}

std::size_t default_max_vars() {
  if (const char* env = std::getenv("PATHREG_MAX_VARS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kAbsoluteMaxVars) return v;
  }
  return kDefaultMaxVars;
}

namespace {

void check_capacity(std::size_t n, std::size_t cap) {
  const std::size_t limit = std::min(cap, kAbsoluteMaxVars);
  if (n > limit) {
    throw CapacityError("ideal has " + std::to_string(n) + " variables, above the enumeration cap of " +
                        std::to_string(limit) + " (raise it with --max-vars, at most " +
                        std::to_string(kAbsoluteMaxVars) + ")");
  }
}

// cover[S] = union of the generators contained in S. S is a face of the
// Stanley-Reisner complex iff cover[S] == 0, and Delta_W is a cone unless
// cover[W] == W.
std::vector<std::uint32_t> generator_cover(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  std::vector<std::uint32_t> cover(std::size_t{1} << n, 0);
  for (VertexSet g : ideal.generators()) cover[g.bits()] = static_cast<std::uint32_t>(g.bits());
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t s = 0; s < cover.size(); ++s) {
      if (s & bit) cover[s] |= cover[s ^ bit];
    }
  }
  return cover;
}

void accumulate_subset(std::uint64_t w, const std::vector<std::uint32_t>& cover, const FieldSpec& field,
                       const simd::Kernels& kernels, BettiTable& table) {
  const VertexSet wset(w);
  std::vector<std::vector<VertexSet>> faces(wset.size() + 1);
  for (std::uint64_t s = w;; s = (s - 1) & w) {
    if (cover[s] == 0) faces[VertexSet(s).size()].push_back(VertexSet(s));
    if (s == 0) break;
  }
  for (auto& layer : faces) std::sort(layer.begin(), layer.end());

  const auto dims = reduced_homology_from_faces(faces, field, kernels);
  const int j = static_cast<int>(wset.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    // dims[k] is H~ in degree d = k - 1, contributing to i = j - d - 1 = j - k.
    table.add(j - static_cast<int>(k), j, dims[k]);
  }
}

}  // namespace

BettiTable betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  if (ideal.is_unit()) throw InputError("Betti numbers of R/I need a proper ideal (got the unit ideal)");
  const std::size_t n = ideal.ambient();
  check_capacity(n, options.max_vars);
  const simd::Kernels& kernels = options.kernels ? *options.kernels : simd::active();

  const auto cover = generator_cover(ideal);
  std::vector<std::uint64_t> work;
  for (std::uint64_t w = 1; w < cover.size(); ++w) {
    if (options.prune_cones && cover[w] != w) continue;
    work.push_back(w);
  }

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, work.size()));
  std::vector<BettiTable> partial(threads);
  auto run = [&](std::size_t worker) {
    for (std::size_t idx = worker; idx < work.size(); idx += threads) {
      accumulate_subset(work[idx], cover, field, kernels, partial[worker]);
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run, t);
  }

  BettiTable table;
  table.add(0, 0, 1);
  for (const auto& p : partial) {
    for (const auto& [key, b] : p.entries()) table.add(key.first, key.second, b);
  }
  return table;
}

Regularity regularity(const MonomialIdeal& ideal, const FieldSpec& field, const BettiOptions& options) {
  if (ideal.is_unit()) return Regularity::minus_infinity();
  if (ideal.is_zero()) return Regularity::of(0);
  return Regularity::of(betti_hochster(ideal, field, options).regularity());
}

std::optional<int> SesBound::slack() const {
  const Regularity bound = std::max(colon_term, sum_term);
  if (!bound.is_finite() || !reg_ideal.is_finite()) return std::nullopt;
  return bound.value() - reg_ideal.value();
}

SesBound verify_ses_bound(const MonomialIdeal& ideal, SquarefreeMonomial m, const FieldSpec& field,
                          const BettiOptions& options) {
  if (m.is_one()) throw InputError("the short exact sequence bound needs a non-unit monomial");
  SesBound out;
  out.reg_ideal = regularity(ideal, field, options);
  out.colon_term = regularity(colon(ideal, m), field, options) + static_cast<int>(m.degree());
  out.sum_term = regularity(add(ideal, MonomialIdeal(ideal.ambient(), {m.support})), field, options);
  out.holds = out.reg_ideal <= std::max(out.colon_term, out.sum_term);
  return out;
}

std::string betti_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (const auto& [key, b] : table.entries()) out << key.first << ',' << key.second << ',' << b << '\n';
  return out.str();
}

std::string betti_pretty(const BettiTable& table) {
  const int pd = table.projective_dimension();
  const int reg = table.regularity();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(reg + 2),
                                              std::vector<std::string>(static_cast<std::size_t>(pd + 2)));
  cells[0][0] = "";
  for (int i = 0; i <= pd; ++i) cells[0][static_cast<std::size_t>(i + 1)] = std::to_string(i);
  for (int r = 0; r <= reg; ++r) {
    cells[static_cast<std::size_t>(r + 1)][0] = std::to_string(r) + ":";
    for (int i = 0; i <= pd; ++i) {
      const auto b = table.at(i, i + r);
      cells[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(i + 1)] = b ? std::to_string(b) : ".";
    }
  }
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (const auto& c : row) {
      std::ostringstream cell;
      cell << std::setw(static_cast<int>(width) + 1) << c;
      line += cell.str();
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  return out.str();
}

std::string betti_json(const BettiTable& table, const FieldSpec& field) {
  nlohmann::ordered_json doc;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, b] : table.entries()) rows.push_back({key.first, key.second, b});
  doc["betti"] = std::move(rows);
  doc["reg"] = table.regularity();
  doc["pd"] = table.projective_dimension();
  doc["field"] = field.name();
  return doc.dump();
}

}  // namespace pathreg
