#pragma once

#include <utility>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

// Coin-meter coupling of variable strength beta in [0,1]. Two-qubit operators
// use coin (x) meter ordering: basis index = 2*coin + meter.
//
// W(beta) is the ordered product of five exponentials,
//   (e^{i pi/4 sy} (x) e^{-i pi/4 tx}) e^{-i beta pi/4 sx(x)tx} (e^{-i pi/4 sy} (x) e^{-i pi/4 tz})
//   (1 (x) e^{-i pi (1-beta) ty/4}) (1 (x) e^{-i pi tz/4})
// with s+ = |1><0|, sx = s+ + s-, sy = i(s+ - s-), sz = [s+, s-] (likewise t
// on the meter). Every generator squares to the identity, so each factor is
// cos(a) 1 - i sin(a) G.
struct MeterCoupling {
  double beta = 0.0;
  Eigen::Matrix4cd unitary;
};

MeterCoupling build_meter_unitary(double beta);

/// Fixed meter rotation into the readout basis. After (1 (x) R) W(beta),
///   (g|0> + h|1>)|0>_m -> g|00> + h|1>(cos(beta pi/2)|0> + sin(beta pi/2)|1>).
Eigen::Matrix2cd meter_readout_frame();

/// Conditional meter states for coin |0> and |1>, meter prepared in |0>, in
/// the readout basis.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> conditional_meter_states(const MeterCoupling& c);

/// Tr_m[W (rho (x) |0><0|) W^dagger].
Eigen::Matrix2cd induced_coin_channel(const MeterCoupling& coupling, const Eigen::Matrix2cd& rho);

/// K_i = <i|_m R W |0>_m, i.e. the coin operators attached to meter outcome i.
std::vector<Eigen::Matrix2cd> kraus_from_meter(const MeterCoupling& coupling);

/// Interference visibility cos(beta pi/2).
double visibility(double beta);
/// Trace distance between the two conditional meter states.
double distinguishability(const MeterCoupling& coupling);

/// Diagonal Kraus set for measuring a d-level coin with strength beta. All
/// coherences between distinct coin states shrink by cos(beta pi/2); the
/// populations are untouched. For d = 2:
///   K_0 = diag(1, cos(beta pi/2)), K_1 = diag(0, sin(beta pi/2)).
/// For d > 2 the operators are the rows of the Cholesky factor of the meter
/// Gram matrix c J + (1 - c) 1 (an extension beyond the qubit meter).
class DephasingKraus {
 public:
  double beta() const noexcept { return beta_; }
  int dimension() const noexcept { return dim_; }
  int num_outcomes() const noexcept { return static_cast<int>(diagonals_.size()); }
  /// Diagonal of K_i.
  const Eigen::VectorXd& diagonal(int outcome) const { return diagonals_.at(outcome); }
  Matrix op(int outcome) const;
  /// Off-diagonal decay factor cos(beta pi/2).
  double coherence_factor() const noexcept { return factor_; }
  /// Entrywise multiplier of the channel: rho -> multiplier .* rho.
  const Eigen::MatrixXd& multiplier() const noexcept { return multiplier_; }

  /// sum_i K_i rho K_i^dagger.
  Matrix apply(const Matrix& rho) const;

 private:
  friend DephasingKraus dephasing_kraus(double beta, int dim);
  double beta_ = 0.0;
  int dim_ = 0;
  double factor_ = 1.0;
  std::vector<Eigen::VectorXd> diagonals_;
  Eigen::MatrixXd multiplier_;
};

DephasingKraus dephasing_kraus(double beta, int dim = 2);

}  // namespace qwalk
