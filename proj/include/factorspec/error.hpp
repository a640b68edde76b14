#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace factorspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, overlapping sets, bad parameters.
class InputError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of a mathematical statement does not hold
/// (e.g. Hong's bound on a disconnected graph). A special input error.
class PreconditionError : public InputError {
public:
  using InputError::InputError;
};

/// Malformed graph6 data. Carries the 1-based line number when the record
/// came from a catalog stream.
class FormatError : public Error {
public:
  explicit FormatError(const std::string &what,
                       std::optional<std::size_t> line = std::nullopt)
      : Error(line ? "line " + std::to_string(*line) + ": " + what : what),
        line_(line) {}

  std::optional<std::size_t> line() const noexcept { return line_; }

private:
  std::optional<std::size_t> line_;
};

/// Graph too large for the graph6 size field.
class UnsupportedSizeError : public FormatError {
public:
  using FormatError::FormatError;
};

/// Exhaustive enumeration would exceed the configured cap or budget.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap.
class NumericalError : public Error {
public:
  NumericalError(const std::string &what, double best_estimate,
                 double residual)
      : Error(what), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

private:
  double best_estimate_;
  double residual_;
};

} // namespace factorspec
