#pragma once

#include <stdexcept>
#include <string>

namespace solvlen {

// Thrown for contract violations (bad degrees, malformed input, exceeded
// resource guards). Message is meant for the CLI user.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace solvlen
