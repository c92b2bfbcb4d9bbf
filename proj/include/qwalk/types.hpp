#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numerical thresholds used across the library. Defaults are the library-wide
// contract; tests may pass a tighter copy.
struct Tolerances {
  double norm = 1e-10;
  double trace = 1e-10;
  double hermiticity = 1e-10;
  double positivity = 1e-10;   // min eigenvalue must be >= -positivity
  double marginal_clamp = 1e-12;
  double unitarity = 1e-10;
  double renormalization_floor = 1e-14;
};

// Graph or edge-list structure is invalid. Carries every violated invariant.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// An argument lies outside an operation's domain (unused port, beta outside
// [0,1], mismatched dimensions, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical invariant (trace, Hermiticity, positivity, unitarity) broke
// beyond tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or configuration. `field` names the offending key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace qwalk
