#include "qwalk/evolution.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qwalk {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1] (got " + std::to_string(p) + ")");
  }
}

// (1_N (x) K) rho (1_N (x) K)^dagger summed over outcomes, as an entrywise
// product with the coin-index multiplier.
void apply_coin_dephasing(Matrix& rho, const DephasingKraus& kraus, int ports) {
  const Eigen::MatrixXd& m = kraus.multiplier();
  const auto n = rho.rows();
  for (Eigen::Index b = 0; b < n; ++b) {
    const auto kb = b % ports;
    for (Eigen::Index a = 0; a < n; ++a) rho(a, b) *= m(a % ports, kb);
  }
}

void apply_vertex_dephasing(Matrix& rho, double p, int ports) {
  if (p == 0.0) return;
  const double keep = 1.0 - p;
  const auto n = rho.rows();
  for (Eigen::Index b = 0; b < n; ++b) {
    const auto vb = b / ports;
    for (Eigen::Index a = 0; a < n; ++a) {
      if (a / ports != vb) rho(a, b) *= keep;
    }
  }
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Index drawn from unnormalized nonnegative weights; never returns a zero-weight index.
int draw(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  int last = -1;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

Vector apply_kraus_diagonal(const Vector& psi, const Eigen::VectorXd& diag, int ports) {
  Vector out(psi.size());
  for (Eigen::Index a = 0; a < psi.size(); ++a) out(a) = psi(a) * diag(a % ports);
  return out;
}

Vector project_vertex(const Vector& psi, int vertex, int ports) {
  Vector out = Vector::Zero(psi.size());
  out.segment(vertex * ports, ports) = psi.segment(vertex * ports, ports);
  return out;
}

std::vector<double> vertex_weights(const Vector& psi, int vertices, int ports) {
  std::vector<double> w(vertices, 0.0);
  for (int j = 0; j < vertices; ++j) w[j] = psi.segment(j * ports, ports).squaredNorm();
  return w;
}

int localized_vertex(const Vector& psi, int vertices, int ports) {
  for (int j = 0; j < vertices; ++j) {
    if (psi.segment(j * ports, ports).squaredNorm() > 1.0 - 1e-12) return j;
  }
  return -1;
}

}  // namespace

std::string to_string(DephasingPlacement placement) {
  return placement == DephasingPlacement::BeforeShift ? "before-shift" : "after-shift";
}

StepMap make_unitary_step(CoinOperator coin, ShiftOperator shift) {
  if (!(coin.dims() == shift.dims())) {
    throw DomainError("coin and shift act on spaces of different shape");
  }
  return StepMap{std::move(coin), std::move(shift), std::nullopt, 0.0,
                 DephasingPlacement::BeforeShift};
}

StepMap make_measured_step(CoinOperator coin, ShiftOperator shift, double beta, double p,
                           DephasingPlacement placement) {
  check_probability(p, "vertex dephasing");
  StepMap step = make_unitary_step(std::move(coin), std::move(shift));
  step.coin_kraus = dephasing_kraus(beta, step.dims().ports);
  step.vertex_dephasing = p;
  step.placement = placement;
  return step;
}

PureState unitary_step(const PureState& psi, const StepMap& step) {
  if (!step.is_unitary()) {
    throw DomainError("unitary_step called with a step that carries measurement options");
  }
  if (!(psi.dims() == step.dims())) throw DomainError("state and step shapes differ");
  return PureState(psi.dims(), step.shift.apply(step.coin.apply(psi.amplitudes())));
}

DensityOperator vertex_dephasing(const DensityOperator& rho, double p) {
  check_probability(p, "vertex dephasing");
  Matrix m = rho.matrix();
  apply_vertex_dephasing(m, p, rho.dims().ports);
  return DensityOperator::unchecked(rho.dims(), std::move(m));
}

DensityOperator cp_step(const DensityOperator& rho, const StepMap& step) {
  if (!(rho.dims() == step.dims())) throw DomainError("state and step shapes differ");
  const int ports = step.dims().ports;
  Matrix m = step.coin.conjugate(rho.matrix());
  if (step.coin_kraus) apply_coin_dephasing(m, *step.coin_kraus, ports);
  if (step.placement == DephasingPlacement::BeforeShift) {
    apply_vertex_dephasing(m, step.vertex_dephasing, ports);
  }
  m = step.shift.conjugate(m);
  if (step.placement == DephasingPlacement::AfterShift) {
    apply_vertex_dephasing(m, step.vertex_dephasing, ports);
  }
  return DensityOperator::unchecked(rho.dims(), std::move(m));
}

DensityOperator run(const PureState& psi0, const StepMap& step, int steps,
                    const StepObserver& observer) {
  if (steps < 0) throw DomainError("step count must be >= 0");
  DensityOperator rho = to_density(psi0);
  if (observer) observer(0, rho);
  for (int t = 1; t <= steps; ++t) {
    rho = cp_step(rho, step);
    if (observer) observer(t, rho);
  }
  return rho;
}

std::vector<Distribution> run_marginals(const PureState& psi0, const StepMap& step, int steps,
                                        bool check, const Tolerances& tol) {
  std::vector<Distribution> out;
  out.reserve(steps + 1);
  run(psi0, step, steps, [&](int t, const DensityOperator& rho) {
    if (check) {
      const DensityReport r = rho.inspect();
      if (!r.ok(tol)) {
        throw NumericalError("density invariant violated at t=" + std::to_string(t) +
                             ": trace error " + std::to_string(r.trace_error) +
                             ", hermiticity error " + std::to_string(r.hermiticity_error) +
                             ", min eigenvalue " + std::to_string(r.min_eigenvalue));
      }
    }
    out.push_back(position_marginal(rho, tol));
  });
  return out;
}

std::vector<Matrix> step_kraus_operators(const StepMap& step) {
  const Dims dims = step.dims();
  const int n = dims.size();
  std::vector<Matrix> coin_ops;
  if (step.coin_kraus) {
    for (int i = 0; i < step.coin_kraus->num_outcomes(); ++i) {
      Matrix k = Matrix::Zero(n, n);
      const auto& diag = step.coin_kraus->diagonal(i);
      for (int a = 0; a < n; ++a) k(a, a) = diag(a % dims.ports);
      coin_ops.push_back(std::move(k));
    }
  } else {
    coin_ops.push_back(Matrix::Identity(n, n));
  }

  std::vector<Matrix> vertex_ops;
  const double p = step.vertex_dephasing;
  if (p == 0.0) {
    vertex_ops.push_back(Matrix::Identity(n, n));
  } else {
    vertex_ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(n, n));
    for (int j = 0; j < dims.vertices; ++j) {
      Matrix proj = Matrix::Zero(n, n);
      for (int k = 0; k < dims.ports; ++k) proj(dims.index(j, k), dims.index(j, k)) = std::sqrt(p);
      vertex_ops.push_back(std::move(proj));
    }
  }

  const Matrix s = step.shift.dense();
  const Matrix c = step.coin.dense();
  std::vector<Matrix> ops;
  for (const Matrix& k : coin_ops) {
    for (const Matrix& v : vertex_ops) {
      if (step.placement == DephasingPlacement::BeforeShift) {
        ops.push_back(s * v * k * c);
      } else {
        ops.push_back(v * s * k * c);
      }
    }
  }
  return ops;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + index * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Trajectory sample_trajectory(const PureState& psi0, const StepMap& step, int steps,
                             std::uint64_t seed, const Tolerances& tol) {
  if (!step.coin_kraus) throw DomainError("trajectory sampling needs a coin meter");
  const double p = step.vertex_dephasing;
  if (p != 0.0 && p != 1.0) {
    throw DomainError("pure-state trajectories support vertex dephasing p = 0 or 1 only");
  }
  if (steps < 0) throw DomainError("step count must be >= 0");
  if (!(psi0.dims() == step.dims())) throw DomainError("state and step shapes differ");

  const Dims dims = step.dims();
  const DephasingKraus& kraus = *step.coin_kraus;
  Rng rng(seed);
  TrajectoryRecord record;
  record.seed = seed;
  Vector psi = psi0.amplitudes();

  auto renormalize = [&](Vector& v, double prob) {
    if (prob < tol.renormalization_floor) {
      throw NumericalError("trajectory branch norm " + std::to_string(prob) +
                           " below renormalization floor");
    }
    v /= std::sqrt(prob);
  };
  auto measure_vertex = [&](Vector& v) {
    const auto w = vertex_weights(v, dims.vertices, dims.ports);
    const int j = draw(w, rng);
    v = project_vertex(v, j, dims.ports);
    renormalize(v, w[j]);
    record.vertex_outcomes.push_back(j);
  };

  for (int t = 0; t < steps; ++t) {
    Vector phi = step.coin.apply(psi);
    std::vector<Vector> branches;
    std::vector<double> weights;
    for (int i = 0; i < kraus.num_outcomes(); ++i) {
      branches.push_back(apply_kraus_diagonal(phi, kraus.diagonal(i), dims.ports));
      weights.push_back(branches.back().squaredNorm());
    }
    const int i = draw(weights, rng);
    psi = std::move(branches[i]);
    renormalize(psi, weights[i]);
    record.outcomes.push_back(i);
    record.outcome_probabilities.push_back(weights[i]);

    if (p == 1.0 && step.placement == DephasingPlacement::BeforeShift) measure_vertex(psi);
    psi = step.shift.apply(psi);
    if (p == 1.0 && step.placement == DephasingPlacement::AfterShift) measure_vertex(psi);
    record.positions.push_back(localized_vertex(psi, dims.vertices, dims.ports));
  }

  psi /= psi.norm();
  return {PureState(dims, std::move(psi)), std::move(record)};
}

std::vector<Branch> enumerate_branches(const PureState& psi0, const StepMap& step, int steps) {
  if (!step.coin_kraus) throw DomainError("branch enumeration needs a coin meter");
  const double p = step.vertex_dephasing;
  if (p != 0.0 && p != 1.0) {
    throw DomainError("branch enumeration supports vertex dephasing p = 0 or 1 only");
  }
  const Dims dims = step.dims();
  const DephasingKraus& kraus = *step.coin_kraus;

  auto split_vertices = [&](std::vector<Branch>& in) {
    std::vector<Branch> out;
    for (Branch& b : in) {
      for (int j = 0; j < dims.vertices; ++j) {
        Vector v = project_vertex(b.state, j, dims.ports);
        const double w = v.squaredNorm();
        if (w == 0.0) continue;
        Branch nb{b.outcomes, b.vertex_outcomes, std::move(v), w};
        nb.vertex_outcomes.push_back(j);
        out.push_back(std::move(nb));
      }
    }
    in = std::move(out);
  };

  std::vector<Branch> current{{{}, {}, psi0.amplitudes(), 1.0}};
  for (int t = 0; t < steps; ++t) {
    std::vector<Branch> next;
    for (const Branch& b : current) {
      const Vector phi = step.coin.apply(b.state);
      for (int i = 0; i < kraus.num_outcomes(); ++i) {
        Vector v = apply_kraus_diagonal(phi, kraus.diagonal(i), dims.ports);
        const double w = v.squaredNorm();
        if (w == 0.0) continue;
        Branch nb{b.outcomes, b.vertex_outcomes, std::move(v), w};
        nb.outcomes.push_back(i);
        next.push_back(std::move(nb));
      }
    }
    if (p == 1.0 && step.placement == DephasingPlacement::BeforeShift) split_vertices(next);
    for (Branch& b : next) b.state = step.shift.apply(b.state);
    if (p == 1.0 && step.placement == DephasingPlacement::AfterShift) split_vertices(next);
    current = std::move(next);
  }
  return current;
}

DensityOperator branch_mixture(const std::vector<Branch>& branches, const Dims& dims) {
  Matrix rho = Matrix::Zero(dims.size(), dims.size());
  for (const Branch& b : branches) rho.noalias() += b.state * b.state.adjoint();
  return DensityOperator::unchecked(dims, std::move(rho));
}

std::vector<int> reconstruct_cycle_path(int start_vertex, const std::vector<int>& outcomes, int n,
                                        CycleConvention convention) {
  const int forward = convention == CycleConvention::ZeroAdvances ? 1 : n - 1;
  std::vector<int> path{start_vertex};
  for (int o : outcomes) {
    if (o != 0 && o != 1) throw DomainError("cycle records hold coin readings 0 or 1");
    const int step = o == 0 ? forward : n - forward;
    path.push_back((path.back() + step) % n);
  }
  return path;
}

}  // namespace qwalk
