#include "spinitc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spinitc/errors.hpp"

namespace spinitc {
namespace {

constexpr int kMaxQlIterations = 50;
constexpr double kSignThreshold = 1e-12;
constexpr double kClusterRelWidth = 1e-9;

// sin(pi * (j*k) / (N+1)) with the argument reduced mod 2(N+1) as an integer,
// so large j*k never loses precision in the float argument.
double sin_pi_ratio(long long numer, long long denom) {
  long long m = numer % (2 * denom);
  return std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(denom));
}

void fix_signs(SpectralDecomposition& dec) {
  for (int k = 0; k < dec.n; ++k) {
    double* v = dec.eigenvectors.data() + static_cast<size_t>(k) * dec.n;
    for (int j = 0; j < dec.n; ++j) {
      if (std::abs(v[j]) > kSignThreshold) {
        if (v[j] < 0.0) {
          for (int l = 0; l < dec.n; ++l) v[l] = -v[l];
        }
        break;
      }
    }
  }
}

// Modified Gram-Schmidt inside clusters of nearly equal eigenvalues, so the
// orthonormality invariant holds even when the QL output is degenerate.
void reorthonormalize_clusters(SpectralDecomposition& dec) {
  const int n = dec.n;
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n) {
      double scale = std::max({1.0, std::abs(dec.eigenvalues[end - 1]),
                               std::abs(dec.eigenvalues[end])});
      if (dec.eigenvalues[end] - dec.eigenvalues[end - 1] > kClusterRelWidth * scale) break;
      ++end;
    }
    for (int k = start; k < end; ++k) {
      double* vk = dec.eigenvectors.data() + static_cast<size_t>(k) * n;
      for (int l = start; l < k; ++l) {
        const double* vl = dec.eigenvectors.data() + static_cast<size_t>(l) * n;
        double proj = std::inner_product(vk, vk + n, vl, 0.0);
        for (int j = 0; j < n; ++j) vk[j] -= proj * vl[j];
      }
      double norm = std::sqrt(std::inner_product(vk, vk + n, vk, 0.0));
      if (norm > 0.0) {
        for (int j = 0; j < n; ++j) vk[j] /= norm;
      }
    }
    start = end;
  }
}

void sort_ascending(SpectralDecomposition& dec) {
  const int n = dec.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return dec.eigenvalues[a] < dec.eigenvalues[b];
  });
  std::vector<double> vals(n);
  std::vector<double> vecs(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    vals[k] = dec.eigenvalues[order[k]];
    std::copy_n(dec.eigenvectors.data() + static_cast<size_t>(order[k]) * n, n,
                vecs.data() + static_cast<size_t>(k) * n);
  }
  dec.eigenvalues = std::move(vals);
  dec.eigenvectors = std::move(vecs);
}

}  // namespace

SpectralDecomposition analytic_spectrum(const ChainSpec& spec) {
  spec.validate();
  if (!spec.homogeneous()) {
    throw std::invalid_argument("analytic_spectrum: only defined for bias = 0");
  }
  const int n = spec.n_spins;
  SpectralDecomposition dec;
  dec.n = n;
  dec.source = SpectralSource::kAnalytic;
  dec.eigenvalues.resize(n);
  dec.eigenvectors.resize(static_cast<size_t>(n) * n);
  const double norm = std::sqrt(2.0 / (n + 1));
  for (int c = 0; c < n; ++c) {
    const long long k = n - c;  // descending k gives ascending 2cos(pi k/(N+1))
    dec.eigenvalues[c] = 2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / (n + 1));
    double* v = dec.eigenvectors.data() + static_cast<size_t>(c) * n;
    for (long long j = 1; j <= n; ++j) {
      v[j - 1] = norm * sin_pi_ratio(j * k, n + 1);
    }
  }
  return dec;
}

SpectralDecomposition numeric_spectrum(const Hamiltonian1& h) {
  const int n = h.size();
  if (n < 1) throw std::invalid_argument("numeric_spectrum: empty Hamiltonian");

  SpectralDecomposition dec;
  dec.n = n;
  dec.source = SpectralSource::kNumericTridiagonal;
  dec.eigenvalues = h.diag;
  dec.eigenvectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) dec.eigenvectors[static_cast<size_t>(k) * n + k] = 1.0;

  std::vector<double>& d = dec.eigenvalues;
  std::vector<double> e(n, 0.0);
  std::copy(h.offdiag.begin(), h.offdiag.end(), e.begin());

  // Implicit-shift QL with Wilkinson shift, in the tql2/tqli lineage.
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations) {
          throw ConvergenceError(
              "numeric_spectrum: QL iteration budget (" + std::to_string(kMaxQlIterations) +
              ") exhausted at eigenvalue index " + std::to_string(l) +
              ", residual off-diagonal " + std::to_string(e[l]));
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          double* zi = dec.eigenvectors.data() + static_cast<size_t>(i) * n;
          double* zi1 = dec.eigenvectors.data() + static_cast<size_t>(i + 1) * n;
          for (int row = 0; row < n; ++row) {
            f = zi1[row];
            zi1[row] = s * zi[row] + c * f;
            zi[row] = c * zi[row] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  sort_ascending(dec);
  reorthonormalize_clusters(dec);
  fix_signs(dec);
  return dec;
}

}  // namespace spinitc
