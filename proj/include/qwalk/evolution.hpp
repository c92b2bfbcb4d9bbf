#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/meter.hpp"
#include "qwalk/shift.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

enum class DephasingPlacement { BeforeShift, AfterShift };

std::string to_string(DephasingPlacement placement);

/// One time step: coin, optional coin measurement, optional vertex
/// dephasing, shift. Without measurement options the step is T = S C.
struct StepMap {
  CoinOperator coin;
  ShiftOperator shift;
  std::optional<DephasingKraus> coin_kraus;
  double vertex_dephasing = 0.0;
  DephasingPlacement placement = DephasingPlacement::BeforeShift;

  bool is_unitary() const noexcept { return !coin_kraus && vertex_dephasing == 0.0; }
  const Dims& dims() const noexcept { return coin.dims(); }
};

StepMap make_unitary_step(CoinOperator coin, ShiftOperator shift);

/// Attaches a coin meter of strength `beta` (always, even for beta = 0) and
/// vertex dephasing of strength `p`.
StepMap make_measured_step(CoinOperator coin, ShiftOperator shift, double beta, double p = 0.0,
                           DephasingPlacement placement = DephasingPlacement::BeforeShift);

/// psi' = S C psi. Throws DomainError if the step carries measurement options.
PureState unitary_step(const PureState& psi, const StepMap& step);

/// Elements between distinct vertices scaled by (1 - p).
DensityOperator vertex_dephasing(const DensityOperator& rho, double p);

DensityOperator cp_step(const DensityOperator& rho, const StepMap& step);

/// Called with (t, rho(t)) for t = 0..steps.
using StepObserver = std::function<void(int, const DensityOperator&)>;

DensityOperator run(const PureState& psi0, const StepMap& step, int steps,
                    const StepObserver& observer = {});

/// Position marginals for t = 0..steps. With `check` set every rho(t) is
/// validated against `tol` and a NumericalError thrown on the first breach.
std::vector<Distribution> run_marginals(const PureState& psi0, const StepMap& step, int steps,
                                        bool check = false, const Tolerances& tol = {});

/// Dense Kraus operators of one full step (coin outcome x vertex-dephasing
/// branch), each S K C (or K S C for after-shift dephasing).
std::vector<Matrix> step_kraus_operators(const StepMap& step);

// Trajectories ---------------------------------------------------------------

inline constexpr const char* kRngAlgorithm =
    "mt19937_64; uniform double = (x >> 11) * 2^-53";

/// splitmix64 of base + index; the seed of sample `index` in an ensemble.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct TrajectoryRecord {
  std::uint64_t seed = 0;
  std::vector<int> outcomes;
  std::vector<double> outcome_probabilities;
  /// Sampled vertex per step when vertex dephasing is p = 1; empty otherwise.
  std::vector<int> vertex_outcomes;
  /// Walker vertex after each step when the state is localized, else -1.
  std::vector<int> positions;
};

struct Trajectory {
  PureState state;
  TrajectoryRecord record;
};

/// Pure-state unraveling of the measured walk. Requires a coin meter and
/// vertex dephasing p in {0, 1}.
Trajectory sample_trajectory(const PureState& psi0, const StepMap& step, int steps,
                             std::uint64_t seed, const Tolerances& tol = {});

struct Branch {
  std::vector<int> outcomes;
  std::vector<int> vertex_outcomes;
  Vector state;  // unnormalized
  double weight = 0.0;
};

/// Every record with nonzero probability after `steps` steps, exactly.
std::vector<Branch> enumerate_branches(const PureState& psi0, const StepMap& step, int steps);

/// sum over branches of |state><state|.
DensityOperator branch_mixture(const std::vector<Branch>& branches, const Dims& dims);

/// Vertex sequence on the cycle implied by a record of sharp coin readings
/// under the direction-preserving shift. Length outcomes.size() + 1.
std::vector<int> reconstruct_cycle_path(int start_vertex, const std::vector<int>& outcomes, int n,
                                        CycleConvention convention = CycleConvention::ZeroAdvances);

}  // namespace qwalk
