#pragma once

#include <stdexcept>
#include <string>

namespace th {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter sits on a pole of the function being evaluated
/// (e.g. the c parameter of 2F1 at a non-positive integer).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation of the potential within the guard band around the
/// singular radius r0.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or iteration hit its cap before reaching tolerance.
/// Carries the partial value so callers can decide what to do with it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value,
                   double est_abs_error, int terms_used)
      : std::runtime_error(what),
        partial_value_(partial_value),
        est_abs_error_(est_abs_error),
        terms_used_(terms_used) {}

  double partial_value() const { return partial_value_; }
  double est_abs_error() const { return est_abs_error_; }
  int terms_used() const { return terms_used_; }

 private:
  double partial_value_;
  double est_abs_error_;
  int terms_used_;
};

/// Catalog file problem; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace th
