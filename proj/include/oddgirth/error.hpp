#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddgirth {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of a bound or construction does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Constraint set is empty (e.g. requested sums are not attainable).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Input too large for the supported representation or enumeration.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerical routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The graph contains an odd cycle shorter than the requested odd girth.
class GirthViolation : public Error {
 public:
  GirthViolation(unsigned found, unsigned required)
      : Error("odd cycle of length " + std::to_string(found) +
              " found, odd girth >= " + std::to_string(required) + " required"),
        found_(found),
        required_(required) {}

  unsigned found() const noexcept { return found_; }
  unsigned required() const noexcept { return required_; }

 private:
  unsigned found_;
  unsigned required_;
};

}  // namespace oddgirth
