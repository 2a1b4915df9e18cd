#include "spinitc/itc.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinitc/errors.hpp"

namespace spinitc {
namespace {

constexpr double kProbabilityExcess = 1e-12;
constexpr double kPmaxInfinityCutoff = 1e-300;

void check_index(const SpectralDecomposition& dec, int i, const char* name) {
  if (i < 1 || i > dec.n) {
    throw std::invalid_argument(std::string(name) + " out of range 1.." +
                                std::to_string(dec.n) + ": " + std::to_string(i));
  }
}

double clip_probability(double p, const char* what) {
  if (p > 1.0) {
    if (p - 1.0 > kProbabilityExcess) {
      throw CrossCheckError(std::string(what) + " exceeds 1 by " +
                            std::to_string(p - 1.0) + ", beyond the 1e-12 rounding allowance");
    }
    return 1.0;
  }
  return p < 0.0 ? 0.0 : p;
}

}  // namespace

double p_t(const SpectralDecomposition& dec, int i, int j, double t) {
  check_index(dec, i, "i");
  check_index(dec, j, "j");
  if (!std::isfinite(t)) throw std::invalid_argument("p_t: t must be finite");
  std::complex<double> amp(0.0, 0.0);
  for (int k = 0; k < dec.n; ++k) {
    const double w = dec.component(k, i - 1) * dec.component(k, j - 1);
    amp += w * std::polar(1.0, -dec.eigenvalues[k] * t);
  }
  return clip_probability(std::norm(amp), "p_t");
}

double row_sum_check(const SpectralDecomposition& dec, int i, double t) {
  check_index(dec, i, "i");
  double sum = 0.0;
  for (int j = 1; j <= dec.n; ++j) sum += p_t(dec, i, j, t);
  return sum;
}

std::vector<double> p_t_matrix(const SpectralDecomposition& dec, double t) {
  const int n = dec.n;
  std::vector<std::complex<double>> phase(n);
  for (int k = 0; k < n; ++k) phase[k] = std::polar(1.0, -dec.eigenvalues[k] * t);
  std::vector<std::complex<double>> amp(static_cast<size_t>(n) * n, {0.0, 0.0});
  for (int k = 0; k < n; ++k) {
    const double* v = dec.eigenvectors.data() + static_cast<size_t>(k) * n;
    const std::complex<double> ph = phase[k];
    for (int i = 0; i < n; ++i) {
      const std::complex<double> vi = ph * v[i];
      std::complex<double>* row = amp.data() + static_cast<size_t>(i) * n;
      for (int j = i; j < n; ++j) row[j] += vi * v[j];
    }
  }
  std::vector<double> p(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double val = clip_probability(std::norm(amp[static_cast<size_t>(i) * n + j]), "p_t");
      p[static_cast<size_t>(i) * n + j] = val;
      p[static_cast<size_t>(j) * n + i] = val;
    }
  }
  return p;
}

double sqrt_p_max(const SpectralDecomposition& dec, int i, int j) {
  check_index(dec, i, "i");
  check_index(dec, j, "j");
  double s = 0.0;
  for (int k = 0; k < dec.n; ++k) {
    s += std::abs(dec.component(k, i - 1) * dec.component(k, j - 1));
  }
  return s;
}

double p_max(const SpectralDecomposition& dec, int i, int j) {
  const double s = sqrt_p_max(dec, i, j);
  return clip_probability(s * s, "p_max");
}

double sqrt_pmax_homogeneous(int n_spins, int i, int j) {
  if (n_spins < 2) throw std::invalid_argument("sqrt_pmax_homogeneous: N >= 2 required");
  if (i < 1 || i > n_spins || j < 1 || j > n_spins) {
    throw std::invalid_argument("sqrt_pmax_homogeneous: spin index out of range");
  }
  const long long denom = n_spins + 1;
  double s = 0.0;
  for (long long k = 1; k <= n_spins; ++k) {
    // integer reduction mod 2(N+1) keeps the sine arguments small and exact
    const long long mi = (k * i) % (2 * denom);
    const long long mj = (k * j) % (2 * denom);
    s += std::abs(std::sin(std::numbers::pi * static_cast<double>(mi) / denom) *
                  std::sin(std::numbers::pi * static_cast<double>(mj) / denom));
  }
  return 2.0 * s / static_cast<double>(denom);
}

ExtReal distance_from_pmax(double pmax_value) {
  if (pmax_value <= kPmaxInfinityCutoff) return ExtReal::infinity();
  double d = -std::log(pmax_value);
  if (d <= 0.0) d = 0.0;
  return ExtReal(d);
}

ITCMatrix itc_matrix(const SpectralDecomposition& dec, const ChainSpec& spec) {
  const int n = dec.n;
  ITCMatrix m;
  m.spec = spec;
  m.n = n;
  m.pmax.assign(static_cast<size_t>(n) * n, 0.0);
  m.distance.n = n;
  m.distance.d.assign(static_cast<size_t>(n) * n, ExtReal(0.0));

  // S[i][j] = sum_k |v_ki| |v_kj|, accumulated one eigenvector at a time.
  std::vector<double> absv(n);
  std::vector<double> s(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double* v = dec.eigenvectors.data() + static_cast<size_t>(k) * n;
    for (int j = 0; j < n; ++j) absv[j] = std::abs(v[j]);
    for (int i = 0; i < n; ++i) {
      const double ai = absv[i];
      double* row = s.data() + static_cast<size_t>(i) * n;
      for (int j = i; j < n; ++j) row[j] += ai * absv[j];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double sij = s[static_cast<size_t>(i) * n + j];
      const double p = clip_probability(sij * sij, "p_max");
      m.pmax[static_cast<size_t>(i) * n + j] = p;
      m.pmax[static_cast<size_t>(j) * n + i] = p;
      const ExtReal d = distance_from_pmax(p);
      m.distance.d[static_cast<size_t>(i) * n + j] = d;
      m.distance.d[static_cast<size_t>(j) * n + i] = d;
    }
  }
  return m;
}

ITCMatrix itc_matrix(const ChainSpec& spec) {
  spec.validate();
  if (spec.homogeneous()) {
    return itc_matrix(analytic_spectrum(spec), spec);
  }
  return itc_matrix(numeric_spectrum(build_hamiltonian(spec)), spec);
}

ExtReal inertia(const PreMetric& m, int j, double alpha) {
  if (j < 1 || j > m.n) throw std::invalid_argument("inertia: j out of range");
  if (alpha < 1.0) throw std::invalid_argument("inertia: alpha >= 1 required");
  ExtReal total(0.0);
  for (int i = 1; i <= m.n; ++i) {
    const ExtReal dij = m.at(i, j);
    if (!dij.finite()) return ExtReal::infinity();
    total = total + pow(dij, alpha);
  }
  return total;
}

ExtReal inertia(const ITCMatrix& m, int j, double alpha) {
  return inertia(m.distance, j, alpha);
}

}  // namespace spinitc
