#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbs {

/// Input that is well-formed but outside the mathematical domain of an
/// operation (letter beyond the alphabet, non-primitive cycle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax error in an operator expression, word, or occupation list.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rbs
