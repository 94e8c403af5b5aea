#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homalg {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the weight shift / decomposition of the 1-tree, which has no
/// lowest internal vertex.
class NoLowestVertex : public std::domain_error {
 public:
  NoLowestVertex() : std::domain_error("the 1-tree has no lowest internal vertex") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace homalg
