#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Input outside the range an exhaustive computation is configured for.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A computed object contradicts one of the structural theorems being checked.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specht
