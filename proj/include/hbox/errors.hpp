#pragma once

#include <stdexcept>
#include <string>

namespace hbox {

// Malformed or out-of-contract input: bad geometry, dimension mismatch,
// unparsable documents. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused to run because it would exceed a configured bound
// (candidate grid size, enumeration budget, dimension cap). Exit code 3.
class ResourceCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbox
