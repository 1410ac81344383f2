#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqt {

/// A mathematically meaningful request that cannot be honoured: a symbol on
/// zero, a reducible "place", an exhausted witness search, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, rational function, or place text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fqt
