#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed surface syntax. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Unknown or malformed identity / variety / algebra name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Term evaluation failure (unbound variable, element out of range).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Invalid algebra data: bad table, bad file, non-member model.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a supported range (search size cap, bracketing arity, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace zlab
