#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stonework {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input: out-of-carrier element, malformed structure, mismatched
// universes, unparseable file content.
class ArgumentError : public Error {
public:
  using Error::Error;
};

// A configured cap (carrier size, variable count) would be exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An internal consistency check failed; this firing indicates a bug.
class InvariantError : public Error {
public:
  using Error::Error;
};

// Lexical or syntax error, with a byte offset into the offending text.
class ParseError : public ArgumentError {
public:
  ParseError(const std::string& what, std::size_t position)
      : ArgumentError(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace stonework
