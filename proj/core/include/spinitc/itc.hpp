#pragma once

#include <vector>

#include "spinitc/chain.hpp"
#include "spinitc/extreal.hpp"
#include "spinitc/spectral.hpp"

namespace spinitc {

// Symmetric pairwise distance table d(i,j) = -log p_max(i,j), zero on the
// diagonal. The triangle inequality is not guaranteed, so this is only a
// pre-metric. Indices are 1-based in at().
struct PreMetric {
  int n = 0;
  std::vector<ExtReal> d;  // n*n row-major

  ExtReal at(int i, int j) const { return d[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

// Maximum excitation-transfer probabilities of a chain plus the derived
// pre-metric. Symmetric by construction (each unordered pair computed once).
struct ITCMatrix {
  ChainSpec spec;
  int n = 0;
  std::vector<double> pmax;  // n*n row-major
  PreMetric distance;

  double pmax_at(int i, int j) const { return pmax[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

// Probability that an excitation prepared on spin i is found on spin j after
// time t, from the spectral sum |sum_k exp(-i lambda_k t) v_ki v_kj|^2.
double p_t(const SpectralDecomposition& dec, int i, int j, double t);

// sum_j p_t(i,j); equals 1 up to rounding for any unitary evolution.
double row_sum_check(const SpectralDecomposition& dec, int i, double t);

// Full p_t matrix for one t (row-major). Cheaper than n^2 p_t calls when a
// whole time grid is scanned.
std::vector<double> p_t_matrix(const SpectralDecomposition& dec, double t);

// Maximum transfer probability (sum_k |v_ki v_kj|)^2, clipped to 1 only when
// the excess is within 1e-12; a larger excess throws CrossCheckError.
double p_max(const SpectralDecomposition& dec, int i, int j);
double sqrt_p_max(const SpectralDecomposition& dec, int i, int j);

// sqrt(p_max) of the homogeneous chain from the explicit sine sum
//   (2/(N+1)) sum_k |sin(pi k i/(N+1)) sin(pi k j/(N+1))|.
// Second, eigendecomposition-free route used for cross-validation.
double sqrt_pmax_homogeneous(int n_spins, int i, int j);

// -log p, with p <= 1e-300 mapped to +infinity and p = 1 to exactly 0.
ExtReal distance_from_pmax(double pmax_value);

ITCMatrix itc_matrix(const ChainSpec& spec);
ITCMatrix itc_matrix(const SpectralDecomposition& dec, const ChainSpec& spec);

// Inertia relative to spin j: sum_i d(i,j)^alpha. +infinity if row j
// contains an infinite distance.
ExtReal inertia(const PreMetric& m, int j, double alpha = 2.0);
ExtReal inertia(const ITCMatrix& m, int j, double alpha = 2.0);

}  // namespace spinitc
