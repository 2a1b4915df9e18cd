#pragma once

#include <span>
#include <vector>

#include "spinitc/chain.hpp"

namespace spinitc {

enum class SpectralSource { kAnalytic, kNumericTridiagonal };

// Full eigensystem of a Hamiltonian1. Eigenvalues ascend. Eigenvector k is
// stored contiguously at [k*n, (k+1)*n); component(k, j) is the amplitude of
// eigenvector k on spin j+1. Sign convention: the first component of each
// eigenvector exceeding 1e-12 in magnitude is positive, so outputs are stable
// across runs.
struct SpectralDecomposition {
  int n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;
  SpectralSource source = SpectralSource::kAnalytic;

  double component(int k, int j) const { return eigenvectors[static_cast<size_t>(k) * n + j]; }
  std::span<const double> eigenvector(int k) const {
    return {eigenvectors.data() + static_cast<size_t>(k) * n, static_cast<size_t>(n)};
  }
};

// Closed-form eigensystem of the homogeneous chain,
//   lambda_k = 2 cos(pi k / (N+1)),   v_kj = sqrt(2/(N+1)) sin(pi j k / (N+1)),
// sorted ascending. Requires bias = 0. The sine arguments are reduced mod
// 2(N+1) in integer arithmetic so the formula stays accurate for large N.
SpectralDecomposition analytic_spectrum(const ChainSpec& spec);

// Implicit-shift QL iteration on the tridiagonal form with eigenvector
// accumulation, followed by an ascending sort, re-orthonormalisation of
// eigenvalue clusters (relative width 1e-9) and the sign normalisation above.
// Deterministic for a given input. Throws ConvergenceError if any eigenvalue
// fails to converge within the iteration budget.
//
// Accuracy: eigenvalues carry an absolute error of order machine epsilon
// times the matrix norm (about 2 + bias). With bias near 1e6 the trapped
// eigenvalues inside the homogeneous band are therefore only accurate to
// roughly 1e-10 absolute; nothing overflows.
SpectralDecomposition numeric_spectrum(const Hamiltonian1& h);

}  // namespace spinitc
