#pragma once

#include <stdexcept>
#include <string>

namespace pathreg {

/// Malformed or out-of-contract input (bad vertex id, non-edge, parse failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance exceeds the configured exhaustive-enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested structure does not exist in the input (e.g. no broom vertex).
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathreg
