#include "qwalk/meter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qwalk {

namespace {

using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in [0,1] (got " + std::to_string(beta) + ")");
  }
}

M2 raise() {
  M2 m = M2::Zero();
  m(1, 0) = 1.0;
  return m;
}

M2 pauli_x() { return raise() + raise().adjoint(); }
M2 pauli_y() { return kI * (raise() - raise().adjoint()); }
M2 pauli_z() {
  const M2 up = raise();
  const M2 down = up.adjoint();
  return up * down - down * up;
}

// exp(-i angle G) for G^2 = 1.
template <typename Mat>
Mat rotate(const Mat& generator, double angle) {
  return std::cos(angle) * Mat::Identity() - kI * std::sin(angle) * generator;
}

M4 kron(const M2& a, const M2& b) {
  M4 out = Eigen::kroneckerProduct(a, b);
  return out;
}

}  // namespace

MeterCoupling build_meter_unitary(double beta) {
  check_beta(beta);
  const M2 sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const M2 id = M2::Identity();
  const M4 f1 = kron(rotate(sy, -kPi / 4), rotate(sx, kPi / 4));
  const M4 f2 = rotate<M4>(kron(sx, sx), beta * kPi / 4);
  const M4 f3 = kron(rotate(sy, kPi / 4), rotate(sz, kPi / 4));
  const M4 f4 = kron(id, rotate(sy, kPi * (1.0 - beta) / 4));
  const M4 f5 = kron(id, rotate(sz, kPi / 4));
  return {beta, f1 * f2 * f3 * f4 * f5};
}

Eigen::Matrix2cd meter_readout_frame() {
  M2 r = M2::Zero();
  r(0, 1) = 1.0;
  r(1, 0) = -kI;
  return r;
}

std::pair<Eigen::Vector2cd, Eigen::Vector2cd> conditional_meter_states(const MeterCoupling& c) {
  const M4 w = kron(M2::Identity(), meter_readout_frame()) * c.unitary;
  // Columns |0>_c|0>_m and |1>_c|0>_m; coin populations are not mixed by W.
  Eigen::Vector2cd m0(w(0, 0), w(1, 0));
  Eigen::Vector2cd m1(w(2, 2), w(3, 2));
  return {m0, m1};
}

Eigen::Matrix2cd induced_coin_channel(const MeterCoupling& coupling, const Eigen::Matrix2cd& rho) {
  M2 ready = M2::Zero();
  ready(0, 0) = 1.0;
  const M4 joint = coupling.unitary * kron(rho, ready) * coupling.unitary.adjoint();
  M2 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out(a, b) = joint(2 * a, 2 * b) + joint(2 * a + 1, 2 * b + 1);
  return out;
}

std::vector<Eigen::Matrix2cd> kraus_from_meter(const MeterCoupling& coupling) {
  const M4 w = kron(M2::Identity(), meter_readout_frame()) * coupling.unitary;
  std::vector<M2> ops(2);
  for (int i = 0; i < 2; ++i) {
    for (int out = 0; out < 2; ++out)
      for (int in = 0; in < 2; ++in) ops[i](out, in) = w(2 * out + i, 2 * in);
  }
  return ops;
}

// cos/sin of beta pi/2 with the sharp endpoint exact: cos(pi/2) rounds to
// 6e-17, which would leave unmeasured residue in every beta = 1 branch.
namespace {
double decay(double beta) { return beta == 1.0 ? 0.0 : std::cos(beta * kPi / 2); }
double leak(double beta) { return beta == 1.0 ? 1.0 : std::sin(beta * kPi / 2); }
}  // namespace

double visibility(double beta) {
  check_beta(beta);
  return decay(beta);
}

double distinguishability(const MeterCoupling& coupling) {
  const auto [m0, m1] = conditional_meter_states(coupling);
  const M2 diff = m0 * m0.adjoint() - m1 * m1.adjoint();
  Eigen::SelfAdjointEigenSolver<M2> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

DephasingKraus dephasing_kraus(double beta, int dim) {
  check_beta(beta);
  if (dim < 1) throw DomainError("coin dimension must be >= 1");
  DephasingKraus k;
  k.beta_ = beta;
  k.dim_ = dim;
  const double c = decay(beta);
  const double s = leak(beta);
  k.factor_ = c;

  if (dim == 2) {
    k.diagonals_ = {Eigen::Vector2d(1.0, c), Eigen::Vector2d(0.0, s)};
  } else {
    // Upper Cholesky factor R of G = c J + (1-c) 1, tolerant of the
    // singular c = 1 case; K_i = diag(R(i, :)).
    Eigen::MatrixXd gram = Eigen::MatrixXd::Constant(dim, dim, c);
    gram.diagonal().setOnes();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      double pivot = gram(i, i);
      for (int m = 0; m < i; ++m) pivot -= r(m, i) * r(m, i);
      if (pivot <= 1e-15) continue;
      r(i, i) = std::sqrt(pivot);
      for (int j = i + 1; j < dim; ++j) {
        double v = gram(i, j);
        for (int m = 0; m < i; ++m) v -= r(m, i) * r(m, j);
        r(i, j) = v / r(i, i);
      }
    }
    for (int i = 0; i < dim; ++i) k.diagonals_.push_back(r.row(i).transpose());
  }

  k.multiplier_ = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& diag : k.diagonals_) k.multiplier_ += diag * diag.transpose();
  return k;
}

Matrix DephasingKraus::op(int outcome) const {
  return diagonals_.at(outcome).cast<Complex>().asDiagonal();
}

Matrix DephasingKraus::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw DomainError("dephasing channel expects a " + std::to_string(dim_) + "x" +
                      std::to_string(dim_) + " matrix");
  }
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < num_outcomes(); ++i) {
    const Matrix k = op(i);
    out.noalias() += k * rho * k.adjoint();
  }
  return out;
}

}  // namespace qwalk
