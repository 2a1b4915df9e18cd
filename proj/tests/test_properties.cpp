// Randomised property checks with a fixed-seed generator: the invariants
// hold on arbitrary chains and pairs, not just the hand-picked cases.
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "spinitc/asymptotics.hpp"
#include "spinitc/chain.hpp"
#include "spinitc/itc.hpp"
#include "spinitc/spectral.hpp"

using namespace spinitc;

namespace {

struct Gen {
  std::mt19937_64 rng{20240811};

  int size(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }
  int odd_size(int lo, int hi) {
    const int n = size(lo, hi);
    return n % 2 == 0 ? n + 1 : n;
  }
  double unit() { return static_cast<double>(rng() >> 11) * 0x1p-53; }
  double bias() { return std::pow(10.0, -1.0 + 5.0 * unit()); }
};

}  // namespace

TEST_CASE("property: spectra satisfy residual, orthonormality, order, sign") {
  Gen gen;
  for (int trial = 0; trial < 40; ++trial) {
    const bool biased = trial % 2 == 1;
    const int n = biased ? gen.odd_size(3, 41) : gen.size(2, 41);
    const ChainSpec spec{n, biased ? gen.bias() : 0.0};
    const Hamiltonian1 h = build_hamiltonian(spec);
    const SpectralDecomposition dec = numeric_spectrum(h);

    for (int k = 0; k < n; ++k) {
      std::vector<double> v(dec.eigenvector(k).begin(), dec.eigenvector(k).end());
      const std::vector<double> hv = h.apply(v);
      double resid = 0.0;
      for (int j = 0; j < n; ++j) resid = std::max(resid, std::abs(hv[j] - dec.eigenvalues[k] * v[j]));
      CHECK(resid <= 1e-10 * std::max(1.0, std::abs(dec.eigenvalues[k])));
      if (k > 0) CHECK(dec.eigenvalues[k] >= dec.eigenvalues[k - 1]);
      for (int l = k; l < n; ++l) {
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += dec.component(k, j) * dec.component(l, j);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-10);
      }
      for (int j = 0; j < n; ++j) {
        if (std::abs(dec.component(k, j)) > 1e-12) {
          CHECK(dec.component(k, j) > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("property: unitarity and the p_max envelope at random times") {
  Gen gen;
  for (int trial = 0; trial < 25; ++trial) {
    const bool biased = trial % 3 == 0;
    const int n = biased ? gen.odd_size(3, 21) : gen.size(2, 21);
    const ChainSpec spec{n, biased ? gen.bias() : 0.0};
    const SpectralDecomposition dec =
        spec.homogeneous() ? analytic_spectrum(spec) : numeric_spectrum(build_hamiltonian(spec));
    const ITCMatrix m = itc_matrix(dec, spec);
    const double t = 50.0 * gen.unit();
    const std::vector<double> pt = p_t_matrix(dec, t);
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        const double v = pt[static_cast<size_t>(i) * n + j];
        row += v;
        CHECK(v <= m.pmax[static_cast<size_t>(i) * n + j] + 1e-10);
        CHECK(v == doctest::Approx(pt[static_cast<size_t>(j) * n + i]).epsilon(1e-12));
      }
      CHECK(std::abs(row - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("property: mirror symmetry of homogeneous p_max") {
  Gen gen;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.size(2, 30);
    const ITCMatrix m = itc_matrix({n, 0.0});
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(std::abs(m.pmax_at(i, j) - m.pmax_at(n + 1 - i, n + 1 - j)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("property: semi-infinite value depends only on the reduced pair") {
  Gen gen;
  for (int trial = 0; trial < 200; ++trial) {
    const long long i = 1 + static_cast<long long>(gen.rng() % 60);
    const long long j = 1 + static_cast<long long>(gen.rng() % 60);
    const long long c = 1 + static_cast<long long>(gen.rng() % 5);
    CHECK(semi_infinite_pmax(c * i, c * j, 1e-8).value ==
          semi_infinite_pmax(i, j, 1e-8).value);
    const AsymptoticValue v = semi_infinite_pmax(i, j, 1e-8);
    CHECK(std::abs(v.series - v.closed) <= 1e-8 + 1e-10);
    CHECK(v.value * v.value >= 64.0 / std::pow(std::numbers::pi, 4.0) - 1e-9);
  }
}

TEST_CASE("property: doubly-infinite reflection invariance, odd scaling, floor") {
  Gen gen;
  for (int trial = 0; trial < 200; ++trial) {
    long long i = 1 + static_cast<long long>(gen.rng() % 50);
    long long j = 1 + static_cast<long long>(gen.rng() % 50);
    if (gen.rng() % 2) i = -i;
    if (gen.rng() % 2) j = -j;
    const double v = doubly_infinite_pmax(i, j, 1e-8).value;
    CHECK(doubly_infinite_pmax(-i, j, 1e-8).value == v);
    CHECK(doubly_infinite_pmax(i, -j, 1e-8).value == v);
    const long long c = 1 + 2 * static_cast<long long>(gen.rng() % 3);
    CHECK(doubly_infinite_pmax(c * i, c * j, 1e-8).value == v);
    CHECK(v >= 8.0 / (std::numbers::pi * std::numbers::pi) - 1e-9);
  }
}
