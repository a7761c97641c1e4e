#pragma once

#include <stdexcept>
#include <string>

namespace cfactors {

// Raised when an exact computation produces a value that violates an internal
// invariant (e.g. a non-integral Schur coefficient). Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cfactors
