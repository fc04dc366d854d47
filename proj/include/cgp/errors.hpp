#pragma once

#include <stdexcept>
#include <string>

namespace cgp {

// Bad caller input: wrong shapes, invalid states/channels, malformed files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cgp
