#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pathreg/field.hpp"
#include "pathreg/ideal.hpp"
#include "pathreg/simd/kernels.hpp"

namespace pathreg {

/// Graded Betti numbers beta_{i,j}(R/I), with beta_{0,0} = 1. Only nonzero
/// entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t count);
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }

  /// max { j - i : beta_{i,j} != 0 }.
  int regularity() const;
  /// max { i : beta_{i,j} != 0 }.
  int projective_dimension() const;

  /// True when every entry of *this is <= the matching entry of other.
  bool entrywise_le(const BettiTable& other) const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

/// Ceiling on the number of variables for exhaustive subset enumeration unless
/// overridden (environment variable PATHREG_MAX_VARS, or explicit options).
inline constexpr std::size_t kDefaultMaxVars = 22;
/// Hard ceiling: the engine keeps one 32-bit word per subset of the variables.
inline constexpr std::size_t kAbsoluteMaxVars = 30;

/// kDefaultMaxVars, or PATHREG_MAX_VARS when set to a valid value.
std::size_t default_max_vars();

struct BettiOptions {
  /// Skip subsets W for which Delta_W is a cone (some vertex of W lies in no
  /// minimal non-face inside W); such W contribute nothing.
  bool prune_cones = true;
  std::size_t max_vars = default_max_vars();
  /// Worker threads for the subset loop; the result does not depend on it.
  std::size_t threads = 1;
  const simd::Kernels* kernels = nullptr;  // nullptr: simd::active()
};

/// Hochster's formula: beta_{i,j}(R/I) = sum over j-subsets W of
/// dim H~_{j-i-1}(Delta_W), Delta the Stanley-Reisner complex of I.
/// Throws InputError on the unit ideal, CapacityError above max_vars.
BettiTable betti_hochster(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::gf2(),
                          const BettiOptions& options = {});

/// Independent route through upper Koszul simplicial complexes:
/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) with K^b(I) = { F subset b : x^{b-F} in I },
/// summed over squarefree b and shifted to R/I indexing. For cross-checking
/// only; defaults to a 16-variable cap.
BettiTable betti_koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::gf2(),
                               std::size_t max_vars = 16, const simd::Kernels* kernels = nullptr);

/// reg(R/I), where the unit ideal has regularity minus infinity.
class Regularity {
 public:
  static Regularity minus_infinity() { return Regularity(); }
  static Regularity of(int value) { return Regularity(value); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws std::bad_optional_access for minus infinity.
  int value() const { return value_.value(); }
  Regularity operator+(int shift) const { return value_ ? Regularity(*value_ + shift) : *this; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  bool operator==(const Regularity&) const = default;
  /// Minus infinity sorts below every integer.
  auto operator<=>(const Regularity& o) const {
    if (!value_ || !o.value_) return value_.has_value() <=> o.value_.has_value();
    return *value_ <=> *o.value_;
  }

 private:
  Regularity() = default;
  explicit Regularity(int v) : value_(v) {}
  std::optional<int> value_;
};

/// reg(R/I) from the Hochster table; 0 for the zero ideal.
Regularity regularity(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::gf2(),
                      const BettiOptions& options = {});

/// Outcome of checking reg(R/I) <= max{ reg(R/(I:m)) + deg m, reg(R/(I + <m>)) },
/// the bound attached to 0 -> R/(I:m)(-deg m) -> R/I -> R/(I+<m>) -> 0.
struct SesBound {
  Regularity reg_ideal = Regularity::minus_infinity();
  Regularity colon_term = Regularity::minus_infinity();  // reg(R/(I:m)) + deg m
  Regularity sum_term = Regularity::minus_infinity();  // reg(R/(I + <m>))
  bool holds = false;
  /// max(colon_term, sum_term) - reg_ideal when everything is finite.
  std::optional<int> slack() const;
};

/// Throws InputError when m = 1.
SesBound verify_ses_bound(const MonomialIdeal& ideal, SquarefreeMonomial m, const FieldSpec& field = FieldSpec::gf2(),
                          const BettiOptions& options = {});

// ---- presentation ----------------------------------------------------------

/// "i,j,beta" rows with a header line.
std::string betti_csv(const BettiTable& table);
/// Macaulay2-style table: columns i, rows j - i.
std::string betti_pretty(const BettiTable& table);
/// {"betti": [[i,j,b],...], "reg": r, "pd": p, "field": name}.
std::string betti_json(const BettiTable& table, const FieldSpec& field);

}  // namespace pathreg
