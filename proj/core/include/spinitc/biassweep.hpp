#pragma once

#include <utility>
#include <vector>

#include "spinitc/chain.hpp"
#include "spinitc/extreal.hpp"

namespace spinitc {

// One grid point of a centre-bias sweep.
struct SweepPoint {
  double zeta = 0.0;
  double lambda_max_over_zeta = 0.0;  // +inf at zeta = 0
  double pmax_1_omega = 0.0;
  double pmax_1_n = 0.0;
  ExtReal d_1_omega{0.0};
  double d_1_omega_over_log_zeta = 0.0;  // NaN for zeta <= 1, where log zeta <= 0
};

// Evaluates the chain at every zeta in the (ascending, nonnegative) grid via
// the numeric spectrum. Odd n_spins required.
std::vector<SweepPoint> sweep(const ChainSpec& base, const std::vector<double>& zeta_grid);

// Least-squares power law through the sweep points with zeta >= 100, fitted
// in amplitude space: log sqrt(pmax_1_omega) = slope * log zeta + log prefactor.
// For N = 3 the amplitude slope is -1 and the prefactor 2, i.e.
// p_max(1, omega) decays like 4/zeta^2; the pmax_* fields carry that squared
// convention (slope -2, prefactor 4).
struct ScalingFit {
  double amplitude_slope = 0.0;
  double amplitude_prefactor = 0.0;
  double pmax_slope = 0.0;       // 2 * amplitude_slope
  double pmax_prefactor = 0.0;   // amplitude_prefactor^2
  int points_used = 0;
};

ScalingFit scaling_constant_estimate(const std::vector<SweepPoint>& points);

// p_max statistics of one spin-pair class.
struct PairClassStats {
  double min_pmax = 1.0;
  double max_pmax = 0.0;
  std::pair<int, int> argmin{0, 0};
  int count = 0;
};

// Pairwise p_max split into same-half pairs, cross-half pairs and pairs
// involving the centre. With a strong bias the centre class carries the
// minimum of all classes while cross-half transfer survives (tunnelling);
// omega_minimal records whether that separation holds.
struct DecouplingReport {
  double zeta = 0.0;
  PairClassStats same_half;
  PairClassStats cross_half;
  PairClassStats with_omega;
  bool omega_minimal = false;
};

DecouplingReport decoupling_report(const ChainSpec& base, double zeta);

}  // namespace spinitc
