#pragma once

#include <stdexcept>
#include <string>

namespace chainring {

/// Input describes a mathematically invalid object (bad presentation,
/// non-local ring, non-unit inverse, ...). The CLI maps this to exit code 1.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size bound was exceeded.
class BoundError : public std::runtime_error {
 public:
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainring
