#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "spinitc/chain.hpp"

using namespace spinitc;

TEST_CASE("homogeneous Hamiltonian is the unit-offdiagonal Toeplitz matrix") {
  const Hamiltonian1 h = build_hamiltonian({3, 0.0});
  CHECK(h.diag == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(h.offdiag == std::vector<double>{1.0, 1.0});
}

TEST_CASE("bias lands on the centre diagonal entry only") {
  const Hamiltonian1 h = build_hamiltonian({5, 2.0});
  CHECK(h.diag == std::vector<double>{0.0, 0.0, 2.0, 0.0, 0.0});
  CHECK(h.offdiag == std::vector<double>{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(build_hamiltonian({4, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian({1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian({0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian({5, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(
      build_hamiltonian({5, std::numeric_limits<double>::infinity()}),
      std::invalid_argument);
}

TEST_CASE("centre index") {
  CHECK(center_index(3) == 2);
  CHECK(center_index(21) == 11);
  CHECK(center_index(201) == 101);
  CHECK_THROWS_AS(center_index(4), std::invalid_argument);
}

TEST_CASE("construction is pure") {
  const ChainSpec spec{21, 3.5};
  const Hamiltonian1 a = build_hamiltonian(spec);
  const Hamiltonian1 b = build_hamiltonian(spec);
  CHECK(a.diag == b.diag);
  CHECK(a.offdiag == b.offdiag);
}

TEST_CASE("dense expansion equals T_N + zeta E entrywise") {
  for (const ChainSpec spec : {ChainSpec{2, 0.0}, ChainSpec{7, 0.0}, ChainSpec{7, 1.5},
                               ChainSpec{11, 1e4}}) {
    const Hamiltonian1 h = build_hamiltonian(spec);
    const int n = h.size();
    // column j of the dense operator, via apply on basis vectors
    for (int j = 0; j < n; ++j) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      const std::vector<double> col = h.apply(e);
      for (int i = 0; i < n; ++i) {
        double expected = 0.0;
        if (std::abs(i - j) == 1) expected = 1.0;
        if (i == j && spec.bias > 0.0 && i == (n + 1) / 2 - 1) expected = spec.bias;
        CHECK(col[i] == expected);
      }
    }
  }
}
