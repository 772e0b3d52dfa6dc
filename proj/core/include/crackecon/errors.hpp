#pragma once

#include <stdexcept>
#include <string>

namespace crackecon {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed corpus input; message names the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parameter outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index or size argument out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Too few usable data points for a fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Operation not available for this input (e.g. unbounded support).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace crackecon
