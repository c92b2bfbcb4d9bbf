#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

double unitarity_error(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix embed_block(const Matrix& block, int vertex, const std::vector<int>& used, int d,
                   const Tolerances& tol) {
  const std::string where = "coin block for vertex " + std::to_string(vertex);
  const int dj = static_cast<int>(used.size());
  if (block.rows() != block.cols()) throw DomainError(where + " is not square");

  Matrix full = Matrix::Zero(d, d);
  if (block.rows() == dj && dj != d) {
    for (int a = 0; a < dj; ++a)
      for (int b = 0; b < dj; ++b) full(used[a], used[b]) = block(a, b);
  } else if (block.rows() == d) {
    full = block;
    std::vector<bool> in_use(d, false);
    for (int k : used) in_use[k] = true;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        if ((!in_use[a] || !in_use[b]) && std::abs(full(a, b)) > tol.unitarity) {
          throw DomainError(where + " has a nonzero entry at (" + std::to_string(a) + "," +
                            std::to_string(b) + ") touching an unused port");
        }
      }
    }
  } else {
    throw DomainError(where + " is " + std::to_string(block.rows()) + "x" +
                      std::to_string(block.cols()) + ", expected " + std::to_string(dj) + "x" +
                      std::to_string(dj) + " or " + std::to_string(d) + "x" + std::to_string(d));
  }

  Matrix restricted(dj, dj);
  for (int a = 0; a < dj; ++a)
    for (int b = 0; b < dj; ++b) restricted(a, b) = full(used[a], used[b]);
  if (dj > 0 && unitarity_error(restricted) > tol.unitarity) {
    throw DomainError(where + " is not unitary on the used ports");
  }
  return full;
}

}  // namespace

Matrix hadamard_phi(double phi) {
  Matrix h(2, 2);
  h << 1.0, -kI * std::exp(kI * phi), kI * std::exp(-kI * phi), -1.0;
  return h / std::sqrt(2.0);
}

Matrix dft_coin(int d) {
  if (d < 1) throw DomainError("DFT coin needs d >= 1");
  Matrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int q = 0; q < d; ++q) {
      // Reduce k*q mod d first so the phase argument stays small.
      const double angle = 2.0 * std::numbers::pi * ((k * q) % d) / d;
      f(q, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return f;
}

CoinSpec CoinSpec::shared(Matrix block) {
  CoinSpec s;
  s.shared_ = true;
  s.blocks_ = {std::move(block)};
  return s;
}

CoinSpec CoinSpec::per_vertex(std::vector<Matrix> blocks) {
  CoinSpec s;
  s.blocks_ = std::move(blocks);
  return s;
}

CoinSpec default_coin(const PortGraph& graph) {
  if (graph.degree() == 2 && graph.is_regular()) {
    return CoinSpec::shared(hadamard_phi(std::numbers::pi / 2));
  }
  if (graph.is_regular()) return CoinSpec::shared(dft_coin(graph.degree()));
  std::vector<Matrix> blocks;
  for (int j = 0; j < graph.num_vertices(); ++j) {
    const int dj = graph.vertex_degree(j);
    blocks.push_back(dj == 0 ? Matrix(0, 0) : dft_coin(dj));
  }
  return CoinSpec::per_vertex(std::move(blocks));
}

CoinOperator build_coin_operator(const PortGraph& graph, const CoinSpec& spec,
                                 const Tolerances& tol) {
  const int n = graph.num_vertices();
  const int d = graph.degree();
  if (spec.is_shared()) {
    if (!graph.is_regular()) {
      throw DomainError("a shared coin block requires every vertex to have degree " +
                        std::to_string(d));
    }
  } else if (static_cast<int>(spec.blocks().size()) != n) {
    throw DomainError("coin spec has " + std::to_string(spec.blocks().size()) +
                      " blocks for a graph with " + std::to_string(n) + " vertices");
  }
  CoinOperator op;
  op.dims_ = dims_of(graph);
  op.blocks_.reserve(n);
  for (int j = 0; j < n; ++j) {
    const Matrix& b = spec.is_shared() ? spec.blocks().front() : spec.blocks()[j];
    op.blocks_.push_back(embed_block(b, j, graph.used_ports(j), d, tol));
  }
  return op;
}

CoinOperator CoinOperator::identity(const PortGraph& graph) {
  std::vector<Matrix> blocks;
  for (int j = 0; j < graph.num_vertices(); ++j) {
    const int dj = graph.vertex_degree(j);
    blocks.push_back(Matrix::Identity(dj, dj));
  }
  return build_coin_operator(graph, CoinSpec::per_vertex(std::move(blocks)));
}

Vector CoinOperator::apply(const Vector& psi) const {
  const int d = dims_.ports;
  Vector out(psi.size());
  for (int j = 0; j < dims_.vertices; ++j) {
    out.segment(j * d, d).noalias() = blocks_[j] * psi.segment(j * d, d);
  }
  return out;
}

Matrix CoinOperator::conjugate(const Matrix& rho) const {
  const int d = dims_.ports;
  Matrix left(rho.rows(), rho.cols());
  for (int j = 0; j < dims_.vertices; ++j) {
    left.middleRows(j * d, d).noalias() = blocks_[j] * rho.middleRows(j * d, d);
  }
  Matrix out(rho.rows(), rho.cols());
  for (int j = 0; j < dims_.vertices; ++j) {
    out.middleCols(j * d, d).noalias() = left.middleCols(j * d, d) * blocks_[j].adjoint();
  }
  return out;
}

Matrix CoinOperator::dense() const {
  const int d = dims_.ports;
  Matrix out = Matrix::Zero(dims_.size(), dims_.size());
  for (int j = 0; j < dims_.vertices; ++j) out.block(j * d, j * d, d, d) = blocks_[j];
  return out;
}

}  // namespace qwalk
