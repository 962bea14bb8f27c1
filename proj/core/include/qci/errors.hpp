#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qci {

/// Malformed polynomial text. `position()` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An input violated a precondition (prime, degree, or family guard).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity contradicted a theorem the engine relies on.
/// Seeing one of these means a bug, never bad user input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Hilbert function did not settle inside the permitted window.
class NoPlateauError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qci
