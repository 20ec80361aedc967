#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paretocom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed profile / committee / edge-list text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a structural invariant (not a partition,
/// k > m, duplicate alternative, id out of range, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// The brute-force search space exceeds the configured cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// An algorithm was invoked outside its domain (e.g. non-dichotomous input).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An improvement step returned a committee that does not Pareto-dominate
/// its input.
class NonImprovingStep : public Error {
 public:
  using Error::Error;
};

}  // namespace paretocom
