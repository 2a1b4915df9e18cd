#include "spinitc/biassweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spinitc/itc.hpp"
#include "spinitc/spectral.hpp"

namespace spinitc {
namespace {

constexpr double kFitZetaFloor = 100.0;  // finite-size transients dominate below

}  // namespace

std::vector<SweepPoint> sweep(const ChainSpec& base, const std::vector<double>& zeta_grid) {
  if (base.n_spins % 2 == 0) {
    throw std::invalid_argument("sweep: odd chain required");
  }
  for (size_t g = 0; g < zeta_grid.size(); ++g) {
    if (!(zeta_grid[g] >= 0.0) || !std::isfinite(zeta_grid[g])) {
      throw std::invalid_argument("sweep: grid values must be finite and nonnegative");
    }
    if (g > 0 && zeta_grid[g] < zeta_grid[g - 1]) {
      throw std::invalid_argument("sweep: grid must ascend");
    }
  }
  const int n = base.n_spins;
  const int omega = center_index(n);

  std::vector<SweepPoint> points;
  points.reserve(zeta_grid.size());
  for (double zeta : zeta_grid) {
    ChainSpec spec{n, zeta};
    const SpectralDecomposition dec = numeric_spectrum(build_hamiltonian(spec));
    SweepPoint pt;
    pt.zeta = zeta;
    pt.lambda_max_over_zeta =
        zeta > 0.0 ? dec.eigenvalues.back() / zeta : std::numeric_limits<double>::infinity();
    pt.pmax_1_omega = p_max(dec, 1, omega);
    pt.pmax_1_n = p_max(dec, 1, n);
    pt.d_1_omega = distance_from_pmax(pt.pmax_1_omega);
    pt.d_1_omega_over_log_zeta = zeta > 1.0
                                     ? pt.d_1_omega.value() / std::log(zeta)
                                     : std::numeric_limits<double>::quiet_NaN();
    points.push_back(pt);
  }
  return points;
}

ScalingFit scaling_constant_estimate(const std::vector<SweepPoint>& points) {
  std::vector<double> x, y;
  for (const SweepPoint& pt : points) {
    if (pt.zeta >= kFitZetaFloor && pt.pmax_1_omega > 0.0) {
      x.push_back(std::log(pt.zeta));
      y.push_back(0.5 * std::log(pt.pmax_1_omega));  // log sqrt(pmax)
    }
  }
  if (x.size() < 3) {
    throw std::invalid_argument("scaling_constant_estimate: need >= 3 points with zeta >= " +
                                std::to_string(kFitZetaFloor));
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  const double var = sxx - sx * sx / n;
  if (var <= 0.0) {
    throw std::invalid_argument("scaling_constant_estimate: degenerate grid (constant zeta)");
  }
  ScalingFit fit;
  fit.amplitude_slope = (sxy - sx * sy / n) / var;
  fit.amplitude_prefactor = std::exp((sy - fit.amplitude_slope * sx) / n);
  fit.pmax_slope = 2.0 * fit.amplitude_slope;
  fit.pmax_prefactor = fit.amplitude_prefactor * fit.amplitude_prefactor;
  fit.points_used = static_cast<int>(x.size());
  return fit;
}

DecouplingReport decoupling_report(const ChainSpec& base, double zeta) {
  if (base.n_spins % 2 == 0) {
    throw std::invalid_argument("decoupling_report: odd chain required");
  }
  const int n = base.n_spins;
  const int omega = center_index(n);
  const ITCMatrix m = itc_matrix(ChainSpec{n, zeta});

  DecouplingReport rep;
  rep.zeta = zeta;
  auto feed = [](PairClassStats& stats, int i, int j, double p) {
    if (p < stats.min_pmax || stats.count == 0) {
      stats.min_pmax = p;
      stats.argmin = {i, j};
    }
    stats.max_pmax = std::max(stats.max_pmax, p);
    ++stats.count;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double p = m.pmax_at(i, j);
      if (i == omega || j == omega) {
        feed(rep.with_omega, i, j, p);
      } else if ((i < omega) != (j < omega)) {
        feed(rep.cross_half, i, j, p);
      } else {
        feed(rep.same_half, i, j, p);
      }
    }
  }
  rep.omega_minimal = rep.with_omega.max_pmax <
                      std::min(rep.same_half.min_pmax, rep.cross_half.min_pmax);
  return rep;
}

}  // namespace spinitc
