#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/shift.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Unbiased walk: p'(j') = sum over neighbours j of p(j) / d_j. Isolated
/// vertices keep their mass.
Distribution classical_step(const Distribution& p, const PortGraph& graph);
Distribution classical_run(const Distribution& p0, const PortGraph& graph, int steps);

/// Closed form on the n-cycle from delta_start: binomial convolution mod n.
Distribution cycle_binomial(int n, int start, int steps);

/// Markov chain on half-edges (vertex, port) induced by a coin with sharp
/// measurements: from |j,k> the coin leads to |j,q> with probability
/// |block_j(q,k)|^2, then the shift moves it. This is the classical limit of a
/// measured walk with an arbitrary (possibly biased) coin.
class HalfEdgeChain {
 public:
  HalfEdgeChain(const CoinOperator& coin, const ShiftOperator& shift);

  const Dims& dims() const noexcept { return dims_; }
  std::vector<double> step(const std::vector<double>& mass) const;
  Distribution vertex_marginal(const std::vector<double>& mass) const;
  /// Vertex marginals for t = 0..steps starting from basis state |vertex,port>.
  std::vector<Distribution> run(int vertex, int port, int steps) const;

 private:
  Dims dims_;
  Eigen::MatrixXd transition_;  // column-stochastic on used half-edges
};

}  // namespace qwalk
