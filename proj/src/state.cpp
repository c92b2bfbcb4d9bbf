#include "qwalk/state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace qwalk {

Distribution::Distribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {}

Distribution Distribution::delta(int size, int at) {
  std::vector<double> p(size, 0.0);
  p.at(at) = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::uniform(int size) {
  return Distribution(std::vector<double>(size, 1.0 / size));
}

double Distribution::sum() const noexcept { return std::accumulate(p_.begin(), p_.end(), 0.0); }

PureState::PureState(Dims dims, Vector amplitudes, const Tolerances& tol)
    : dims_(dims), amps_(std::move(amplitudes)) {
  if (amps_.size() != dims_.size()) {
    throw DomainError("state has " + std::to_string(amps_.size()) + " amplitudes, expected " +
                      std::to_string(dims_.size()));
  }
  const double err = std::abs(amps_.squaredNorm() - 1.0);
  if (err > tol.norm) {
    throw DomainError("state is not normalized (|norm^2 - 1| = " + std::to_string(err) + ")");
  }
}

DensityReport inspect_density(const Matrix& rho, bool spectrum) {
  DensityReport r;
  r.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  r.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (spectrum) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
  }
  return r;
}

DensityOperator::DensityOperator(Dims dims, Matrix matrix, const Tolerances& tol)
    : dims_(dims), rho_(std::move(matrix)) {
  if (rho_.rows() != dims_.size() || rho_.cols() != dims_.size()) {
    throw DomainError("density matrix shape does not match dimension " +
                      std::to_string(dims_.size()));
  }
  const DensityReport r = inspect();
  if (!r.ok(tol)) {
    throw NumericalError("invalid density operator: trace error " + std::to_string(r.trace_error) +
                         ", hermiticity error " + std::to_string(r.hermiticity_error) +
                         ", min eigenvalue " + std::to_string(r.min_eigenvalue));
  }
}

DensityOperator DensityOperator::unchecked(Dims dims, Matrix matrix) {
  DensityOperator out;
  out.dims_ = dims;
  out.rho_ = std::move(matrix);
  return out;
}

PureState basis_state(const PortGraph& graph, int vertex, int port) {
  if (!graph.is_used(vertex, port)) {
    throw DomainError("(" + std::to_string(vertex) + "," + std::to_string(port) +
                      ") is not a used port of the graph");
  }
  const Dims dims = dims_of(graph);
  Vector amps = Vector::Zero(dims.size());
  amps(dims.index(vertex, port)) = 1.0;
  return PureState(dims, std::move(amps));
}

DensityOperator to_density(const PureState& psi) {
  const Vector& a = psi.amplitudes();
  return DensityOperator::unchecked(psi.dims(), a * a.adjoint());
}

Distribution position_marginal(const DensityOperator& rho, const Tolerances& tol) {
  const Dims& dims = rho.dims();
  std::vector<double> p(dims.vertices, 0.0);
  for (int j = 0; j < dims.vertices; ++j) {
    double s = 0.0;
    for (int k = 0; k < dims.ports; ++k) {
      const int a = dims.index(j, k);
      s += rho(a, a).real();
    }
    if (s < 0.0) {
      if (s < -tol.marginal_clamp) {
        throw NumericalError("negative vertex probability " + std::to_string(s) + " at vertex " +
                             std::to_string(j));
      }
      s = 0.0;
    }
    p[j] = s;
  }
  return Distribution(std::move(p));
}

Distribution position_marginal(const PureState& psi) {
  const Dims& dims = psi.dims();
  std::vector<double> p(dims.vertices, 0.0);
  for (int j = 0; j < dims.vertices; ++j) {
    for (int k = 0; k < dims.ports; ++k) p[j] += std::norm(psi.amplitude(j, k));
  }
  return Distribution(std::move(p));
}

Matrix partial_trace_meter(const Matrix& joint, int system_dim, int meter_dim) {
  if (system_dim < 1 || meter_dim < 1 || joint.rows() != system_dim * meter_dim ||
      joint.cols() != joint.rows()) {
    throw DomainError("partial trace: joint operator is " + std::to_string(joint.rows()) + "x" +
                      std::to_string(joint.cols()) + ", expected " +
                      std::to_string(system_dim * meter_dim) + " square");
  }
  Matrix out = Matrix::Zero(system_dim, system_dim);
  for (int a = 0; a < system_dim; ++a) {
    for (int b = 0; b < system_dim; ++b) {
      Complex s = 0.0;
      for (int m = 0; m < meter_dim; ++m) s += joint(a * meter_dim + m, b * meter_dim + m);
      out(a, b) = s;
    }
  }
  return out;
}

}  // namespace qwalk
