#pragma once

#include <stdexcept>

namespace sombor {

// Rejected input: bad polygon size, malformed probability vector, out-of-range
// attachment type, and so on. The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a resource guard (enumeration state space, pmf support,
// graph size). The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sombor
