#include "spinitc/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinitc {

void ChainSpec::validate() const {
  if (n_spins < 2) {
    throw std::invalid_argument("ChainSpec: n_spins must be >= 2, got " +
                                std::to_string(n_spins));
  }
  if (!std::isfinite(bias) || bias < 0.0) {
    throw std::invalid_argument("ChainSpec: bias must be finite and >= 0");
  }
  if (bias > 0.0 && n_spins % 2 == 0) {
    throw std::invalid_argument(
        "ChainSpec: a centre bias requires an odd chain (no centre spin for N = " +
        std::to_string(n_spins) + ")");
  }
}

std::vector<double> Hamiltonian1::apply(const std::vector<double>& x) const {
  const int n = size();
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) v += offdiag[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

Hamiltonian1 build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  Hamiltonian1 h;
  h.diag.assign(spec.n_spins, 0.0);
  h.offdiag.assign(spec.n_spins - 1, 1.0);
  if (spec.bias > 0.0) {
    h.diag[center_index(spec) - 1] = spec.bias;
  }
  return h;
}

int center_index(int n_spins) {
  if (n_spins < 2 || n_spins % 2 == 0) {
    throw std::invalid_argument("center_index: chain length must be odd and >= 3, got " +
                                std::to_string(n_spins));
  }
  return (n_spins + 1) / 2;
}

int center_index(const ChainSpec& spec) { return center_index(spec.n_spins); }

}  // namespace spinitc
