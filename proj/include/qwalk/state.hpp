#pragma once

#include <cstddef>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

// Shape of the walker+coin space. Basis |j,k> sits at flat index j*ports+k.
struct Dims {
  int vertices = 0;
  int ports = 0;
  int size() const noexcept { return vertices * ports; }
  int index(int vertex, int port) const noexcept { return vertex * ports + port; }
  bool operator==(const Dims&) const = default;
};

inline Dims dims_of(const PortGraph& g) { return {g.num_vertices(), g.degree()}; }

/// Probability vector over vertices.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<double> probabilities);

  static Distribution delta(int size, int at);
  static Distribution uniform(int size);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  double& operator[](std::size_t i) { return p_[i]; }
  const std::vector<double>& probabilities() const noexcept { return p_; }
  double sum() const noexcept;

 private:
  std::vector<double> p_;
};

class PureState {
 public:
  /// Throws DomainError if the size does not match `dims` or the norm is off.
  PureState(Dims dims, Vector amplitudes, const Tolerances& tol = {});

  const Dims& dims() const noexcept { return dims_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  Complex amplitude(int vertex, int port) const { return amps_(dims_.index(vertex, port)); }

 private:
  Dims dims_;
  Vector amps_;
};

/// Health of a density matrix against its invariants.
struct DensityReport {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  bool ok(const Tolerances& tol) const noexcept {
    return trace_error <= tol.trace && hermiticity_error <= tol.hermiticity &&
           min_eigenvalue >= -tol.positivity;
  }
};

/// With `spectrum` false the eigenvalue check is skipped (min_eigenvalue = 0).
DensityReport inspect_density(const Matrix& rho, bool spectrum = true);

class DensityOperator {
 public:
  /// Validates trace, Hermiticity and positivity; throws NumericalError.
  DensityOperator(Dims dims, Matrix matrix, const Tolerances& tol = {});

  /// Skips validation. For maps already known to preserve the invariants.
  static DensityOperator unchecked(Dims dims, Matrix matrix);

  const Dims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

  DensityReport inspect() const { return inspect_density(rho_); }

 private:
  DensityOperator() = default;
  Dims dims_;
  Matrix rho_;
};

/// |j,k> for a used port of the graph.
PureState basis_state(const PortGraph& graph, int vertex, int port);

DensityOperator to_density(const PureState& psi);

/// P(j) = sum_k rho[(j,k),(j,k)]. Entries in (-marginal_clamp, 0) are clamped
/// to zero; anything more negative is a NumericalError.
Distribution position_marginal(const DensityOperator& rho, const Tolerances& tol = {});
Distribution position_marginal(const PureState& psi);

/// Tr_meter of an operator on system (x) meter (meter index fastest).
Matrix partial_trace_meter(const Matrix& joint, int system_dim, int meter_dim);

}  // namespace qwalk
