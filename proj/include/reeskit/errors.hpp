#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reeskit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text. position() is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

private:
  std::string message_;
  std::size_t position_;
};

// Operands live in different ring contexts (variables or order differ).
class ContextMismatch : public Error {
public:
  using Error::Error;
};

// A configured resource bound (basis size, degree, exponent width) was exceeded.
class ResourceCapExceeded : public Error {
public:
  using Error::Error;
};

// Violated precondition of an operation (bad argument, non-regular element, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace reeskit
