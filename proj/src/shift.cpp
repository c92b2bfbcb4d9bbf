#include "qwalk/shift.hpp"

namespace qwalk {

std::string to_string(ShiftKind kind) {
  return kind == ShiftKind::PortSwap ? "port-swap" : "direction-preserving";
}

std::string to_string(CycleConvention convention) {
  return convention == CycleConvention::ZeroAdvances ? "coin-0-advances" : "coin-0-retreats";
}

ShiftOperator build_shift(const PortGraph& graph) {
  ShiftOperator s;
  s.kind_ = ShiftKind::PortSwap;
  s.dims_ = dims_of(graph);
  s.target_.resize(s.dims_.size());
  for (int j = 0; j < s.dims_.vertices; ++j) {
    for (int k = 0; k < s.dims_.ports; ++k) {
      const int from = s.dims_.index(j, k);
      if (graph.is_used(j, k)) {
        const HalfEdge to = graph.zeta(j, k);
        s.target_[from] = s.dims_.index(to.vertex, to.port);
      } else {
        s.target_[from] = from;
      }
    }
  }
  return s;
}

ShiftOperator build_cycle_shift(int n, CycleConvention convention) {
  if (n < 3) throw StructuralError({"cycle shift needs n >= 3 (got " + std::to_string(n) + ")"});
  ShiftOperator s;
  s.kind_ = ShiftKind::DirectionPreserving;
  s.dims_ = {n, 2};
  s.target_.resize(2 * n);
  const int forward = convention == CycleConvention::ZeroAdvances ? 1 : n - 1;
  const int backward = n - forward;
  for (int j = 0; j < n; ++j) {
    s.target_[s.dims_.index(j, 0)] = s.dims_.index((j + forward) % n, 0);
    s.target_[s.dims_.index(j, 1)] = s.dims_.index((j + backward) % n, 1);
  }
  return s;
}

Vector ShiftOperator::apply(const Vector& psi) const {
  Vector out(psi.size());
  for (int a = 0; a < psi.size(); ++a) out(target_[a]) = psi(a);
  return out;
}

Matrix ShiftOperator::conjugate(const Matrix& rho) const {
  const int n = static_cast<int>(target_.size());
  Matrix out(n, n);
  for (int b = 0; b < n; ++b) {
    const int tb = target_[b];
    for (int a = 0; a < n; ++a) out(target_[a], tb) = rho(a, b);
  }
  return out;
}

Matrix ShiftOperator::dense() const {
  const int n = static_cast<int>(target_.size());
  Matrix out = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) out(target_[a], a) = 1.0;
  return out;
}

}  // namespace qwalk
