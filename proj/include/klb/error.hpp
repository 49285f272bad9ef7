#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An instance violates a structural invariant of its type, or an operation's
/// precondition does not hold.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A brute-force oracle was asked to enumerate more than its configured cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Some restriction of the formula was rejected by the sub-solver.
class BackdoorInvalid : public Error {
public:
  using Error::Error;
};

/// Syntax or semantic error while reading one of the text formats.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace klb
