#include "qwalk/analysis.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qwalk/classical.hpp"

namespace qwalk {

double tvd(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DomainError("tvd: lengths differ (" + std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

Distribution time_averaged_distribution(std::span<const Distribution> marginals) {
  if (marginals.empty()) throw DomainError("time average of an empty sequence");
  std::vector<double> acc(marginals.front().size(), 0.0);
  for (const Distribution& m : marginals) {
    if (m.size() != acc.size()) throw DomainError("time average: lengths differ");
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += m[i];
  }
  for (double& x : acc) x /= static_cast<double>(marginals.size());
  return Distribution(std::move(acc));
}

double coherence_l1(const DensityOperator& rho) {
  const Matrix& m = rho.matrix();
  return m.cwiseAbs().sum() - m.diagonal().cwiseAbs().sum();
}

double coin_coherence_l1(const Matrix& rho, int ports) {
  double s = 0.0;
  for (Eigen::Index j = 0; j * ports < rho.rows(); ++j) {
    const auto block = rho.block(j * ports, j * ports, ports, ports);
    s += block.cwiseAbs().sum() - block.diagonal().cwiseAbs().sum();
  }
  return s;
}

MixingCurve mixing_curve(std::span<const Distribution> marginals, MixingVariant variant) {
  MixingCurve curve;
  curve.variant = variant;
  if (marginals.empty()) return curve;
  const auto n = marginals.front().size();
  const Distribution uniform = Distribution::uniform(static_cast<int>(n));
  std::vector<double> acc(n, 0.0);
  for (std::size_t t = 0; t < marginals.size(); ++t) {
    curve.times.push_back(static_cast<int>(t));
    if (variant == MixingVariant::Instantaneous) {
      curve.tvd_to_uniform.push_back(tvd(marginals[t], uniform));
    } else {
      for (std::size_t i = 0; i < n; ++i) acc[i] += marginals[t][i];
      std::vector<double> mean(acc);
      for (double& x : mean) x /= static_cast<double>(t + 1);
      curve.tvd_to_uniform.push_back(tvd(Distribution(std::move(mean)), uniform));
    }
  }
  return curve;
}

std::optional<int> first_crossing(const MixingCurve& curve, double epsilon) {
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    if (curve.tvd_to_uniform[i] <= epsilon) return curve.times[i];
  }
  return std::nullopt;
}

StepMap StepTemplate::at(double beta) const {
  return make_measured_step(coin, shift, beta, vertex_dephasing, placement);
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  const int workers = std::max(1, std::min(jobs, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<ComplementarityPoint> complementarity_sweep(const StepTemplate& tmpl, int start_vertex,
                                                        int start_port, int steps,
                                                        const std::vector<double>& betas,
                                                        int jobs) {
  const Dims dims = tmpl.coin.dims();
  Vector amps = Vector::Zero(dims.size());
  if (start_vertex < 0 || start_vertex >= dims.vertices || start_port < 0 ||
      start_port >= dims.ports) {
    throw DomainError("start state outside the walker+coin space");
  }
  amps(dims.index(start_vertex, start_port)) = 1.0;
  const PureState psi0(dims, amps);

  const Distribution unitary =
      position_marginal(run(psi0, tmpl.at(0.0), steps));
  const Distribution classical =
      HalfEdgeChain(tmpl.coin, tmpl.shift).run(start_vertex, start_port, steps).back();

  std::vector<ComplementarityPoint> points(betas.size());
  parallel_for(static_cast<int>(betas.size()), jobs, [&](int i) {
    const double beta = betas[i];
    const DensityOperator rho = run(psi0, tmpl.at(beta), steps);
    const Distribution p = position_marginal(rho);
    ComplementarityPoint& pt = points[i];
    pt.beta = beta;
    pt.visibility = visibility(beta);
    pt.distinguishability = distinguishability(build_meter_unitary(beta));
    pt.tvd_to_unitary = tvd(p, unitary);
    pt.tvd_to_classical = tvd(p, classical);
    pt.coherence = coherence_l1(rho);
  });
  return points;
}

}  // namespace qwalk
