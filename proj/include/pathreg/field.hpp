#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathreg {

/// Coefficient field for homology: characteristic 0 (the rationals) or a prime p.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = (1U << 31) - 1;

  /// GF(2).
  FieldSpec() = default;
  /// Throws InputError unless `characteristic` is 0 or a prime <= kMaxPrime.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec gf2() { return FieldSpec(2); }
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Accepts "q", "gf2", "gf<p>" (case-insensitive) or a bare characteristic.
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  /// "q", "gf2" or "gf<p>".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t characteristic_ = 2;
};

bool is_prime(std::uint64_t n);

}  // namespace pathreg
