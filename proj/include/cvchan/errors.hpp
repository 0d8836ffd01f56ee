#pragma once

#include <stdexcept>
#include <string>

namespace cvchan {

/// Thrown when a covariance matrix has a symplectic eigenvalue below 1 - kTolPhys.
class NonPhysicalStateError : public std::runtime_error {
 public:
  explicit NonPhysicalStateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a map failing the complete-positivity test is applied or composed.
class CpViolationError : public std::runtime_error {
 public:
  CpViolationError(const std::string& msg, double min_eigenvalue)
      : std::runtime_error(msg), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Pipeline-DSL syntax or argument error; always carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("pipeline parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cvchan
