#pragma once

#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

enum class ShiftKind { PortSwap, DirectionPreserving };

// Orientation of the direction-preserving cycle shift. ZeroAdvances moves
// coin state 0 from v_j to v_{j+1} (the default); ZeroRetreats is the mirror
// convention S|j,e> = |j - (-1)^e, e>.
enum class CycleConvention { ZeroAdvances, ZeroRetreats };

std::string to_string(ShiftKind kind);
std::string to_string(CycleConvention convention);

/// Conditional swap as a permutation of flat basis indices. Unused (vertex,
/// port) slots map to themselves so the matrix is a full permutation.
class ShiftOperator {
 public:
  ShiftKind kind() const noexcept { return kind_; }
  const Dims& dims() const noexcept { return dims_; }
  /// Flat index that basis state `index` is sent to.
  int target(int index) const { return target_.at(index); }
  const std::vector<int>& permutation() const noexcept { return target_; }

  Vector apply(const Vector& psi) const;
  /// S rho S^dagger.
  Matrix conjugate(const Matrix& rho) const;
  Matrix dense() const;

 private:
  friend ShiftOperator build_shift(const PortGraph&);
  friend ShiftOperator build_cycle_shift(int, CycleConvention);
  ShiftKind kind_ = ShiftKind::PortSwap;
  Dims dims_;
  std::vector<int> target_;
};

/// S|j,k> = |zeta(j,k)>. Self-inverse.
ShiftOperator build_shift(const PortGraph& graph);

/// S|j,0> = |j+1,0>, S|j,1> = |j-1,1> (mod n) under ZeroAdvances.
ShiftOperator build_cycle_shift(int n, CycleConvention convention = CycleConvention::ZeroAdvances);

}  // namespace qwalk
