#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/state.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

// Coin blocks act on column vectors: C|k> = sum_q block(q, k) |q>.

/// Generalized Hadamard (1/sqrt2)[[1, -i e^{i phi}], [i e^{-i phi}, -1]].
Matrix hadamard_phi(double phi);

/// (1/sqrt d) exp(2 pi i k q / d).
Matrix dft_coin(int d);

/// Coin blocks before they are checked against a graph. A single shared block
/// applies to every vertex; otherwise one block per vertex. A block may be
/// d x d (zero rows/columns at unused ports) or d_j x d_j (acts on the used
/// ports in ascending order and is zero-padded by the builder).
class CoinSpec {
 public:
  static CoinSpec shared(Matrix block);
  static CoinSpec per_vertex(std::vector<Matrix> blocks);

  bool is_shared() const noexcept { return shared_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

 private:
  bool shared_ = false;
  std::vector<Matrix> blocks_;
};

/// H_{pi/2} everywhere for 2-regular graphs; otherwise DFT(d_j) per vertex.
CoinSpec default_coin(const PortGraph& graph);

/// Block-diagonal coin on H_vc, stored as one d x d block per vertex.
class CoinOperator {
 public:
  const Dims& dims() const noexcept { return dims_; }
  const Matrix& block(int vertex) const { return blocks_.at(vertex); }

  Vector apply(const Vector& psi) const;
  /// C rho C^dagger, blockwise.
  Matrix conjugate(const Matrix& rho) const;
  Matrix dense() const;

  /// Identity coin on the used ports of `graph`.
  static CoinOperator identity(const PortGraph& graph);

 private:
  friend CoinOperator build_coin_operator(const PortGraph&, const CoinSpec&, const Tolerances&);
  Dims dims_;
  std::vector<Matrix> blocks_;
};

/// Embeds and validates the blocks. Throws DomainError for a shared block on a
/// non-regular graph, wrong block shapes, nonzero entries at unused ports, or
/// blocks that are not unitary on the used subspace.
CoinOperator build_coin_operator(const PortGraph& graph, const CoinSpec& spec,
                                 const Tolerances& tol = {});

}  // namespace qwalk
