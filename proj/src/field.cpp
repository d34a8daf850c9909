#include "pathreg/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pathreg/error.hpp"

namespace pathreg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic > kMaxPrime)) {
    throw InputError("field characteristic must be 0 or a prime below 2^31 (got " +
                     std::to_string(characteristic) + ")");
  }
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q" || s == "qq" || s == "0") return rationals();
  std::string_view digits = s;
  if (digits.starts_with("gf")) digits.remove_prefix(2);
  std::uint64_t p = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || end != digits.data() + digits.size() || p > kMaxPrime) {
    throw InputError("unrecognised field '" + std::string(text) + "' (use q, gf2 or gf<p>)");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? "q" : "gf" + std::to_string(characteristic_);
}

}  // namespace pathreg
