#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// File could not be parsed; `line` is the 1-based offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Mismatched grid or mesh dimensions between inputs.
class dimension_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-facing parameter (resolution, covariance, noise spec, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero-area triangle or zero-Jacobian quad corner.
class degenerate_geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interior mesh vertex carries an odd number of critical edges (> 1),
/// which signals a sign degeneracy upstream.
class parity_error : public std::runtime_error {
 public:
  parity_error(const std::string& what, int vertex)
      : std::runtime_error(what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Internal bookkeeping disagrees with a closed-form prediction.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jacobi
