#pragma once

#include <stdexcept>
#include <string>

namespace lfw {

// Incompatible inputs (mixed field parameters, mismatched value domains).
struct structural_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Input outside an operation's domain (empty family, bad index, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Valid input whose data does not satisfy a theorem's hypothesis; the
// operation declines to produce a verdict. CLI maps this to exit code 3.
struct refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lfw
