#pragma once

#include <stdexcept>
#include <string>

namespace ggl {

// Bad caller input (invalid letters, out-of-range parameters, malformed text).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded (enumeration size, relator count).
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The request is valid but outside what this build supports
// (e.g. Whitehead automorphism enumeration beyond the configured rank).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ggl
