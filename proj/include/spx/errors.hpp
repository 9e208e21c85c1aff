#pragma once

#include <stdexcept>
#include <string>

namespace spx {

// Malformed or out-of-contract arguments. Maps to CLI exit code 1.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured cap (group order, module dimension,
// enumeration budget). Maps to CLI exit code 2.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tabloid-basis vector does not lie in the span of the polytabloids.
class not_in_span : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_input(what);
}

}  // namespace spx
