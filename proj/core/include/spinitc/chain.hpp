#pragma once

#include <vector>

namespace spinitc {

// Physical description of an XX chain: n_spins two-level systems with unit
// nearest-neighbour coupling, plus an optional on-site potential `bias`
// applied to the centre spin of an odd chain. bias = 0 is the homogeneous
// chain. Spins are addressed 1..N in every public interface.
struct ChainSpec {
  int n_spins = 2;
  double bias = 0.0;

  bool homogeneous() const { return bias == 0.0; }

  // Throws std::invalid_argument unless n_spins >= 2, bias is finite and
  // nonnegative, and bias > 0 implies odd n_spins.
  void validate() const;
};

// Single-excitation Hamiltonian in the natural spin basis: real symmetric
// tridiagonal, unit off-diagonal, zero diagonal except for the bias at the
// centre index (N+1)/2. Stored 0-based; offdiag[i] couples spins i+1, i+2.
struct Hamiltonian1 {
  std::vector<double> diag;
  std::vector<double> offdiag;

  int size() const { return static_cast<int>(diag.size()); }

  // y = H x, for residual checks and the like.
  std::vector<double> apply(const std::vector<double>& x) const;
};

Hamiltonian1 build_hamiltonian(const ChainSpec& spec);

// Centre spin omega = (N+1)/2 in the 1-based convention. Odd N required.
int center_index(int n_spins);
int center_index(const ChainSpec& spec);

}  // namespace spinitc
