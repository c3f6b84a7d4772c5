#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwclone {

// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a word, term, monoid or clone description.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Operands that do not fit together: element/monoid, arity or monoid mismatch.
class mismatch_error : public error {
public:
  using error::error;
};

// Requested operation is not defined for the given clone or parameters.
class unsupported_error : public error {
public:
  using error::error;
};

// A configurable resource cap was exceeded.
class limit_error : public error {
public:
  using error::error;
};

}  // namespace pwclone
