#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbc {

// Precondition violations on otherwise well-formed values (rank mismatch,
// malformed Whitehead data, letters out of range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A resource cap (vertex budget, candidate budget, deadline) was reached.
// Callers must not treat partial results as complete.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input; carries a position for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  // Structural errors in otherwise well-formed JSON are located by path.
  ParseError(const std::string& what, const std::string& path)
      : std::runtime_error(what + " (at " + (path.empty() ? std::string("/") : path) + ")"), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pbc
