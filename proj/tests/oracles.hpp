// Test-only reference implementations, deliberately independent of the code
// paths they check: a cyclic-Jacobi dense eigensolver (vs the tridiagonal QL),
// Gauss-Legendre quadrature of the defining |sin||sin| integrals (vs series
// and cotangent closed forms), and the closed-form three-spin biased
// eigensystem (vs the numeric sweep).
#pragma once

#include <cmath>
#include <vector>

#include "spinitc/itc.hpp"

namespace oracles {

struct DenseEig {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // eigenvector k contiguous at [k*n, (k+1)*n)
  double component(int k, int j) const { return vectors[static_cast<size_t>(k) * n + j]; }
};

// Cyclic Jacobi rotations on a dense symmetric matrix (row-major n x n).
DenseEig jacobi_eigensystem(std::vector<double> a, int n);

// 2 * Int_0^1 |sin(pi i x) sin(pi j x)| dx, split at the kinks and integrated
// with Gauss-Legendre panels: the semi-infinite sqrt(p_max) by definition.
double quad_sqrt_pmax_semi(long long i, long long j);

// Doubly-infinite sqrt(p_max) from the defining integrals over one period,
// with the integrand pair selected by the parities of i and j.
double quad_sqrt_pmax_doubly(long long i, long long j);

// Three-spin chain with centre bias zeta, from the closed-form eigensystem:
// eigenvalues {a, 0, b} with a = zeta/2 - sqrt(zeta^2+8)/2, b = zeta/2 +
// sqrt(zeta^2+8)/2 (so a b = -2), eigenvectors (1, a, 1), (-1, 0, 1), (1, b, 1)
// up to normalisation.
inline double n3_lambda_max(double zeta) {
  return zeta / 2.0 + std::sqrt(zeta * zeta + 8.0) / 2.0;
}

inline double n3_sqrt_pmax12(double zeta) {
  const double b = n3_lambda_max(zeta);
  const double a = -2.0 / b;
  return std::abs(a) / (a * a + 2.0) + b / (b * b + 2.0);
}

inline double n3_pmax12(double zeta) {
  const double s = n3_sqrt_pmax12(zeta);
  return s * s;
}

// Unit-weight path graph distances d(i,j) = |i-j|: a genuine metric that is
// 0-hyperbolic.
inline spinitc::PreMetric path_graph_metric(int n) {
  spinitc::PreMetric m;
  m.n = n;
  m.d.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.d.push_back(spinitc::ExtReal(std::abs(i - j)));
  return m;
}

}  // namespace oracles
