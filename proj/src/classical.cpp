#include "qwalk/classical.hpp"

#include <cmath>
#include <string>

namespace qwalk {

Distribution classical_step(const Distribution& p, const PortGraph& graph) {
  const int n = graph.num_vertices();
  if (static_cast<int>(p.size()) != n) {
    throw DomainError("distribution has " + std::to_string(p.size()) + " entries, graph has " +
                      std::to_string(n) + " vertices");
  }
  std::vector<double> out(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto ports = graph.used_ports(j);
    if (ports.empty()) {
      out[j] += p[j];
      continue;
    }
    const double share = p[j] / static_cast<double>(ports.size());
    for (int k : ports) out[graph.zeta(j, k).vertex] += share;
  }
  return Distribution(std::move(out));
}

Distribution classical_run(const Distribution& p0, const PortGraph& graph, int steps) {
  if (steps < 0) throw DomainError("step count must be >= 0");
  Distribution p = p0;
  for (int t = 0; t < steps; ++t) p = classical_step(p, graph);
  return p;
}

Distribution cycle_binomial(int n, int start, int steps) {
  std::vector<double> out(n, 0.0);
  // log-space binomial weights keep large step counts finite.
  for (int m = 0; m <= steps; ++m) {
    const double logw = std::lgamma(steps + 1.0) - std::lgamma(m + 1.0) -
                        std::lgamma(steps - m + 1.0) - steps * std::log(2.0);
    const long displacement = 2L * m - steps;
    const long pos = ((start + displacement) % n + n) % n;
    out[pos] += std::exp(logw);
  }
  return Distribution(std::move(out));
}

HalfEdgeChain::HalfEdgeChain(const CoinOperator& coin, const ShiftOperator& shift)
    : dims_(coin.dims()) {
  if (!(coin.dims() == shift.dims())) {
    throw DomainError("coin and shift act on spaces of different shape");
  }
  const int n = dims_.size();
  const int d = dims_.ports;
  transition_ = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < dims_.vertices; ++j) {
    const Matrix& b = coin.block(j);
    for (int k = 0; k < d; ++k) {
      for (int q = 0; q < d; ++q) {
        const double w = std::norm(b(q, k));
        if (w != 0.0) transition_(shift.target(dims_.index(j, q)), dims_.index(j, k)) += w;
      }
    }
  }
}

std::vector<double> HalfEdgeChain::step(const std::vector<double>& mass) const {
  Eigen::Map<const Eigen::VectorXd> in(mass.data(), static_cast<Eigen::Index>(mass.size()));
  Eigen::VectorXd out = transition_ * in;
  return {out.data(), out.data() + out.size()};
}

Distribution HalfEdgeChain::vertex_marginal(const std::vector<double>& mass) const {
  std::vector<double> p(dims_.vertices, 0.0);
  for (int a = 0; a < dims_.size(); ++a) p[a / dims_.ports] += mass[a];
  return Distribution(std::move(p));
}

std::vector<Distribution> HalfEdgeChain::run(int vertex, int port, int steps) const {
  std::vector<double> mass(dims_.size(), 0.0);
  mass.at(dims_.index(vertex, port)) = 1.0;
  std::vector<Distribution> out{vertex_marginal(mass)};
  for (int t = 0; t < steps; ++t) {
    mass = step(mass);
    out.push_back(vertex_marginal(mass));
  }
  return out;
}

}  // namespace qwalk
