#pragma once

#include <stdexcept>

namespace ifcrack {

// Request is well-formed but outside what the formulation covers (oscillatory
// inversion with beta != 0, plane skew closed form with lambda != 0, ...).
// The CLI maps this to its own exit code, distinct from inadmissible physics.
struct OutOfScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ifcrack
