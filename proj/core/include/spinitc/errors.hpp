#pragma once

#include <stdexcept>
#include <string>

namespace spinitc {

// A numerical self-check failed: two supposedly equal routes disagree, or a
// probability exceeds 1 by more than rounding allows. The CLI maps this to
// exit code 3.
class CrossCheckError : public std::runtime_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver exhausted its iteration budget. The CLI maps this to
// exit code 4.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinitc
