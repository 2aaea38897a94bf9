#pragma once

#include <stdexcept>
#include <string>

namespace levyopt {

// Bad or ill-typed model configuration (file contents, schema violations).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The maximization problem has no finite maximizer on the requested set.
struct UnboundedProblemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace levyopt
