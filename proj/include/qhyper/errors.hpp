#pragma once

#include <stdexcept>
#include <string>

namespace qhyper {

/// An operation was called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands do not live in the same algebra (variant, radius, base).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative procedure failed to reach its precision target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Radius or parameter hypotheses of a construction are violated.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed expression text; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line, long column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

}  // namespace qhyper
