#pragma once

#include <cstdint>
#include <random>

#include "pathreg/graph.hpp"

namespace pathreg {

/// Reproducible random source. The raw stream is std::mt19937_64 seeded with
/// the 64-bit seed, whose output sequence is fixed by the C++ standard; the
/// derived draws below use only integer arithmetic on that stream, so any
/// implementation following the same recipe reproduces the same graphs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound) by rejection: draws x until x < 2^64 - (2^64 mod bound),
  /// then returns x mod bound.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p: (next() >> 11) * 2^-53 < p.
  bool bernoulli(double p);
  /// Each vertex of `from` kept independently with probability 1/2.
  VertexSet subset(VertexSet from);

 private:
  std::mt19937_64 engine_;
};

/// Uniform labelled tree: n-2 Prufer symbols, each below(n), decoded by always
/// attaching the smallest current leaf. n = 1 gives K1, n = 2 gives K2.
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_tree(std::size_t n, Rng& rng);

/// random_tree(n) from the same stream, plus one chord picked by below(k) from
/// the k non-edges listed in lexicographic (u, v) order. Requires n >= 3.
Graph random_unicyclic(std::size_t n, std::uint64_t seed);
Graph random_unicyclic(std::size_t n, Rng& rng);

/// G(n, p): pairs (u, v), u < v, visited lexicographically, each kept when
/// bernoulli(p) succeeds.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
Graph random_graph(std::size_t n, double p, Rng& rng);

}  // namespace pathreg
