#include <gtest/gtest.h>

#include <numbers>

#include "qwalk/coin.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::testing::max_abs;

namespace {
constexpr double kPi = std::numbers::pi;

double unitarity_error(const Matrix& u) {
  return max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.rows()));
}
}  // namespace

TEST(Coin, HadamardAtHalfPiIsRealHadamard) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  EXPECT_LT(max_abs(hadamard_phi(kPi / 2) - h / std::sqrt(2.0)), 1e-15);
}

TEST(Coin, HadamardAtZero) {
  const Complex i(0, 1);
  Matrix h(2, 2);
  h << 1.0, -i, i, -1.0;
  EXPECT_LT(max_abs(hadamard_phi(0.0) - h / std::sqrt(2.0)), 1e-15);
}

TEST(Coin, HadamardUnitaryForAnyPhase) {
  for (double phi = -4.0; phi <= 4.0; phi += 0.37) {
    EXPECT_LT(unitarity_error(hadamard_phi(phi)), 1e-12) << phi;
  }
}

TEST(Coin, DftSmallCases) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  EXPECT_LT(max_abs(dft_coin(2) - h / std::sqrt(2.0)), 1e-15);
  EXPECT_EQ(dft_coin(1)(0, 0), Complex(1.0));
  for (int d : {3, 4, 5, 8}) EXPECT_LT(unitarity_error(dft_coin(d)), 1e-12) << d;
  const Matrix f = dft_coin(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) EXPECT_LT(std::abs(f.col(a).dot(f.col(b))), 1e-12);
}

TEST(Coin, CycleOperatorIsBlockDiagonal) {
  const PortGraph g = build_cycle(3);
  const CoinOperator c = build_coin_operator(g, CoinSpec::shared(hadamard_phi(kPi / 2)));
  const Matrix u = c.dense();
  ASSERT_EQ(u.rows(), 6);
  EXPECT_LT(unitarity_error(u), 1e-12);
  for (int j = 0; j < 3; ++j) {
    EXPECT_LT(max_abs(u.block(2 * j, 2 * j, 2, 2) - hadamard_phi(kPi / 2)), 1e-15);
  }
  Matrix offdiag = u;
  for (int j = 0; j < 3; ++j) offdiag.block(2 * j, 2 * j, 2, 2).setZero();
  EXPECT_EQ(max_abs(offdiag), 0.0);
}

TEST(Coin, SharedAndPerVertexAgree) {
  const PortGraph g = build_cycle(5);
  const Matrix h = hadamard_phi(0.3);
  const CoinOperator shared = build_coin_operator(g, CoinSpec::shared(h));
  const CoinOperator each = build_coin_operator(g, CoinSpec::per_vertex(std::vector<Matrix>(5, h)));
  EXPECT_EQ(max_abs(shared.dense() - each.dense()), 0.0);
}

TEST(Coin, ReducedDegreeZeroConstraint) {
  // path 0-1-2: degree 2 overall, the end vertices use one port.
  const PortGraph g = PortGraph::from_edge_list(assign_ports({{0, 1}, {1, 2}}));
  ASSERT_EQ(g.degree(), 2);
  const Matrix h = hadamard_phi(kPi / 2);
  EXPECT_THROW(build_coin_operator(g, CoinSpec::shared(h)), DomainError);
  EXPECT_THROW(build_coin_operator(g, CoinSpec::per_vertex({h, h, h})), DomainError);

  Matrix one(1, 1);
  one << 1.0;
  const CoinOperator c = build_coin_operator(g, CoinSpec::per_vertex({one, h, one}));
  EXPECT_EQ(c.block(0)(0, 0), Complex(1.0));
  EXPECT_EQ(c.block(0)(1, 1), Complex(0.0));
  EXPECT_EQ(c.block(0)(0, 1), Complex(0.0));

  Matrix padded = Matrix::Zero(2, 2);
  padded(0, 0) = Complex(0.0, 1.0);
  EXPECT_NO_THROW(build_coin_operator(g, CoinSpec::per_vertex({padded, h, one})));
}

TEST(Coin, NonUnitaryRejected) {
  const PortGraph g = build_cycle(3);
  Matrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(build_coin_operator(g, CoinSpec::shared(m)), DomainError);
  EXPECT_THROW(build_coin_operator(g, CoinSpec::shared(Matrix::Identity(3, 3))), DomainError);
  EXPECT_THROW(build_coin_operator(g, CoinSpec::per_vertex({m})), DomainError);
}

TEST(Coin, DefaultCoins) {
  const PortGraph cycle = build_cycle(4);
  const CoinOperator c = build_coin_operator(cycle, default_coin(cycle));
  EXPECT_LT(max_abs(c.block(2) - hadamard_phi(kPi / 2)), 1e-15);

  const PortGraph g = example_general_graph();
  const CoinOperator d = build_coin_operator(g, default_coin(g));
  for (int j = 0; j < g.num_vertices(); ++j) {
    const auto ports = g.used_ports(j);
    for (int a : ports)
      for (int b : ports) EXPECT_NEAR(std::norm(d.block(j)(a, b)), 1.0 / ports.size(), 1e-12);
  }
}

TEST(Coin, UnitaryOnUsedSubspace) {
  const PortGraph g = example_general_graph();
  const Matrix u = build_coin_operator(g, default_coin(g)).dense();
  Matrix projector = Matrix::Zero(24, 24);
  for (int j = 0; j < 6; ++j)
    for (int k : g.used_ports(j)) projector(4 * j + k, 4 * j + k) = 1.0;
  EXPECT_LT(max_abs(u.adjoint() * u - projector), 1e-10);
}

TEST(Coin, PreservesPositionMarginal) {
  std::mt19937_64 rng(5);
  const PortGraph g = build_cycle(6);
  const CoinOperator c = build_coin_operator(g, CoinSpec::shared(hadamard_phi(1.1)));
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi({6, 2}, qwalk::testing::random_vector(12, rng));
    const Distribution before = position_marginal(psi);
    const Distribution after = position_marginal(PureState({6, 2}, c.apply(psi.amplitudes())));
    for (int j = 0; j < 6; ++j) EXPECT_NEAR(before[j], after[j], 1e-12);

    const Matrix rho = qwalk::testing::random_density(12, rng);
    const Matrix out = c.conjugate(rho);
    EXPECT_LT(max_abs(out - c.dense() * rho * c.dense().adjoint()), 1e-12);
  }
}
