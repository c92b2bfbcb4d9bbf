#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwalk/evolution.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// Total variation distance (1/2) sum |p - q|.
double tvd(const Distribution& p, const Distribution& q);

/// Cesaro mean of the given marginals.
Distribution time_averaged_distribution(std::span<const Distribution> marginals);

/// sum over a != b of |rho_ab| in the |j,k> basis.
double coherence_l1(const DensityOperator& rho);
/// Same, restricted to entries inside each vertex's coin block.
double coin_coherence_l1(const Matrix& rho, int ports);

enum class MixingVariant { Instantaneous, TimeAveraged };

struct MixingCurve {
  std::vector<int> times;
  std::vector<double> tvd_to_uniform;
  MixingVariant variant = MixingVariant::Instantaneous;
};

/// TVD to the uniform distribution of marginals[t] (or of their running
/// Cesaro mean) for t = 0..marginals.size()-1.
MixingCurve mixing_curve(std::span<const Distribution> marginals, MixingVariant variant);

/// First time with TVD <= epsilon, if any.
std::optional<int> first_crossing(const MixingCurve& curve, double epsilon);

struct ComplementarityPoint {
  double beta = 0.0;
  double visibility = 1.0;
  double distinguishability = 0.0;
  double tvd_to_unitary = 0.0;
  double tvd_to_classical = 0.0;
  /// Interference proxy: l1 coherence of the final state.
  double coherence = 0.0;
};

/// Coin, shift and vertex dephasing shared by every point of a sweep; the
/// coin-meter strength varies.
struct StepTemplate {
  CoinOperator coin;
  ShiftOperator shift;
  double vertex_dephasing = 0.0;
  DephasingPlacement placement = DephasingPlacement::BeforeShift;

  StepMap at(double beta) const;
};

/// One point per beta, in input order. Work is spread over `jobs` threads;
/// results do not depend on the thread count.
std::vector<ComplementarityPoint> complementarity_sweep(const StepTemplate& tmpl, int start_vertex,
                                                        int start_port, int steps,
                                                        const std::vector<double>& betas,
                                                        int jobs = 1);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace qwalk
