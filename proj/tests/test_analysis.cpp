#include <gtest/gtest.h>

#include <numbers>

#include "qwalk/analysis.hpp"
#include "qwalk/classical.hpp"
#include "support.hpp"

using namespace qwalk;

namespace {

StepTemplate cycle_template(int n) {
  const PortGraph g = build_cycle(n);
  return {build_coin_operator(g, default_coin(g)), build_cycle_shift(n)};
}

StepTemplate general_template() {
  const PortGraph g = example_general_graph();
  return {build_coin_operator(g, default_coin(g)), build_shift(g)};
}

Distribution random_distribution(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (double& x : p) s += (x = e(rng));
  for (double& x : p) x /= s;
  return Distribution(p);
}

}  // namespace

TEST(Tvd, Examples) {
  const Distribution u = Distribution::uniform(7);
  EXPECT_EQ(tvd(u, u), 0.0);
  EXPECT_EQ(tvd(Distribution::delta(7, 0), Distribution::delta(7, 1)), 1.0);
  const Distribution p({0.25, 0.5, 0.25, 0, 0, 0, 0});
  EXPECT_NEAR(tvd(p, u), 4.0 / 7.0, 1e-15);
  EXPECT_THROW(tvd(u, Distribution::uniform(6)), DomainError);
}

TEST(Tvd, MetricAxioms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 9;
    const Distribution a = random_distribution(n, rng);
    const Distribution b = random_distribution(n, rng);
    const Distribution c = random_distribution(n, rng);
    EXPECT_EQ(tvd(a, b), tvd(b, a));
    EXPECT_LE(tvd(a, c), tvd(a, b) + tvd(b, c) + 1e-12);
    EXPECT_GE(tvd(a, b), 0.0);
    EXPECT_LE(tvd(a, b), 1.0);
  }
}

TEST(TimeAverage, Basics) {
  const std::vector<Distribution> one{Distribution::delta(4, 2)};
  EXPECT_EQ(tvd(time_averaged_distribution(one), one[0]), 0.0);
  const std::vector<Distribution> two{Distribution::delta(4, 0), Distribution::delta(4, 1)};
  const Distribution avg = time_averaged_distribution(two);
  EXPECT_EQ(avg[0], 0.5);
  EXPECT_EQ(avg[1], 0.5);
  EXPECT_EQ(avg[2], 0.0);
  EXPECT_THROW(time_averaged_distribution(std::vector<Distribution>{}), DomainError);
}

TEST(Coherence, Examples) {
  const PortGraph g = build_cycle(5);
  Vector v = Vector::Zero(10);
  v(0) = v(1) = 1.0 / std::sqrt(2.0);
  const DensityOperator rho = to_density(PureState(dims_of(g), v));
  EXPECT_NEAR(coherence_l1(rho), 1.0, 1e-15);
  EXPECT_NEAR(coin_coherence_l1(rho.matrix(), 2), 1.0, 1e-15);

  const DensityOperator diag = DensityOperator(dims_of(g), Matrix::Identity(10, 10) / 10.0);
  EXPECT_EQ(coherence_l1(diag), 0.0);

  const StepMap sharp = make_measured_step(CoinOperator::identity(g), build_cycle_shift(5), 1.0);
  const DensityOperator after = cp_step(rho, sharp);
  EXPECT_NEAR(coherence_l1(after), 0.0, 1e-15);
}

TEST(Mixing, InstantaneousOscillatesTimeAverageConverges) {
  const StepTemplate tmpl = cycle_template(7);
  const auto marg = run_marginals(basis_state(build_cycle(7), 0, 0), tmpl.at(0.0), 500);
  const auto inst = mixing_curve(marg, MixingVariant::Instantaneous);
  const auto avg = mixing_curve(marg, MixingVariant::TimeAveraged);
  ASSERT_EQ(inst.times.size(), 501u);
  ASSERT_EQ(avg.tvd_to_uniform.size(), 501u);
  EXPECT_LT(avg.tvd_to_uniform.back(), 0.05);
  double late_max = 0.0;
  for (int t = 400; t <= 500; ++t) late_max = std::max(late_max, inst.tvd_to_uniform[t]);
  EXPECT_GT(late_max, 0.1);
  for (double x : inst.tvd_to_uniform) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
}

TEST(Mixing, CrossingTimes) {
  std::vector<Distribution> marg;
  for (int t = 0; t <= 60; ++t) marg.push_back(cycle_binomial(6, 0, t));
  const auto curve = mixing_curve(marg, MixingVariant::Instantaneous);
  EXPECT_FALSE(first_crossing(curve, 0.05).has_value());
  EXPECT_EQ(first_crossing(curve, 1.0), 0);
}

TEST(Sweep, EndpointsOnCycle) {
  const auto pts = complementarity_sweep(cycle_template(7), 0, 0, 20, {0.0, 0.5, 1.0});
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].visibility, 1.0);
  EXPECT_EQ(pts[0].distinguishability, 0.0);
  EXPECT_EQ(pts[0].tvd_to_unitary, 0.0);
  EXPECT_NEAR(pts[2].visibility, 0.0, 1e-15);
  EXPECT_NEAR(pts[2].distinguishability, 1.0, 1e-12);
  EXPECT_LT(pts[2].tvd_to_classical, 1e-10);
  EXPECT_GT(pts[1].tvd_to_unitary, 0.0);
  EXPECT_GT(pts[1].tvd_to_classical, 0.0);
  for (const auto& p : pts) {
    EXPECT_NEAR(p.visibility * p.visibility + p.distinguishability * p.distinguishability, 1.0,
                1e-12);
  }
}

TEST(Sweep, EndpointsOnGeneralGraph) {
  for (double p : {0.0, 0.3}) {
    StepTemplate tmpl = general_template();
    tmpl.vertex_dephasing = p;
    const auto pts = complementarity_sweep(tmpl, 2, 1, 15, {0.0, 1.0});
    EXPECT_EQ(pts[0].tvd_to_unitary, 0.0);
    EXPECT_LT(pts[1].tvd_to_classical, 1e-10);
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  std::vector<double> betas;
  for (int i = 0; i <= 10; ++i) betas.push_back(i / 10.0);
  const auto a = complementarity_sweep(cycle_template(7), 0, 0, 20, betas, 1);
  const auto b = complementarity_sweep(cycle_template(7), 0, 0, 20, betas, 4);
  ASSERT_EQ(a.size(), 11u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].beta, betas[i]);
    EXPECT_EQ(a[i].tvd_to_unitary, b[i].tvd_to_unitary);
    EXPECT_EQ(a[i].tvd_to_classical, b[i].tvd_to_classical);
    EXPECT_EQ(a[i].coherence, b[i].coherence);
  }
}
