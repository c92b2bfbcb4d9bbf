#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qwalk/state.hpp"

namespace qwalk::testing {

inline Vector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

/// Random full-rank density matrix: G G^dagger / tr, G Ginibre.
inline Matrix random_density(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = Complex(g(rng), g(rng));
  Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Independent amplitude walker on the n-cycle with the real Hadamard coin and
/// the direction-preserving shift. `forward` is the step taken by coin 0.
/// Plain arrays, no library operators.
inline std::vector<double> cycle_hadamard_marginal(int n, int steps, int forward) {
  using C = std::complex<double>;
  std::vector<C> up(n, 0.0), down(n, 0.0);  // coin 0, coin 1
  up[0] = 1.0;
  const double h = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < steps; ++t) {
    std::vector<C> nu(n, 0.0), nd(n, 0.0);
    for (int j = 0; j < n; ++j) {
      const C a = h * (up[j] + down[j]);
      const C b = h * (up[j] - down[j]);
      nu[((j + forward) % n + n) % n] += a;
      nd[((j - forward) % n + n) % n] += b;
    }
    up = nu;
    down = nd;
  }
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) p[j] = std::norm(up[j]) + std::norm(down[j]);
  return p;
}

}  // namespace qwalk::testing
