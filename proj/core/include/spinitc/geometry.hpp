#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "spinitc/extreal.hpp"
#include "spinitc/itc.hpp"

namespace spinitc {

// Per-row distance maxima of an odd chain. holds is true iff every row
// i != omega attains its maximum at omega; exact ties are broken toward
// omega and recorded in tied_rows.
struct AntiCoreResult {
  int omega = 0;
  bool holds = false;
  int majority_argmax = 0;  // most frequent row argmax (mode; smallest on ties)
  std::vector<std::pair<int, int>> violations;  // (row i, offending argmax j)
  std::vector<int> tied_rows;
};

AntiCoreResult find_anticore(const PreMetric& m);
AntiCoreResult find_anticore(const ITCMatrix& m);

// Gromov four-point condition over quadruples {x,y,z,w}: half the gap between
// the largest and second-largest of the three pair sums, maximised over
// quadruples. Exhaustive when C(n,4) <= budget, otherwise `budget` quadruples
// are drawn with the seeded generator. Quadruples containing an infinite
// distance are skipped and counted.
struct FourPointResult {
  double delta = 0.0;
  std::array<int, 4> quad{0, 0, 0, 0};  // attaining quadruple, 1-based
  long long scanned = 0;
  long long skipped_infinite = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

FourPointResult four_point_delta(const PreMetric& m, long long budget = 2'000'000,
                                 std::uint64_t seed = 12345);

// Path-sum bound: sqrt(p_max(i,j)) <= sum over intermediate sequences
// k_1..k_{segments-2} of prod_l sqrt(p_max(k_{l-1}, k_l)). Exhaustive when
// n^(segments-2) <= 2e6, otherwise `trials` sequences are sampled (a sampled
// sum underestimates the right-hand side, so only exhaustive margins are
// meaningful as a bound check). omega_share is the fraction of the
// accumulated sum contributed by sequences visiting the centre (odd n only).
struct PathProductReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double omega_share = 0.0;
  long long terms = 0;
  bool exhaustive = true;
};

PathProductReport path_product_bound_check(const ITCMatrix& m, int i, int j, int segments,
                                           long long trials = 0, std::uint64_t seed = 12345);

struct DiameterResult {
  ExtReal value{0.0};
  int i = 0;
  int j = 0;
};

// Largest off-diagonal distance with the first attaining pair in row-major
// order; infinite as soon as any p_max vanishes.
DiameterResult diameter(const PreMetric& m);
DiameterResult diameter(const ITCMatrix& m);

struct TriangleViolation {
  int i = 0, j = 0, k = 0;
  double excess = 0.0;  // d(i,k) - d(i,j) - d(j,k)
};

struct TriangleAudit {
  std::vector<TriangleViolation> violations;
  double max_excess = 0.0;
};

// All (i,j,k) with d(i,k) > d(i,j) + d(j,k) + tol. Empty for genuine metrics;
// ITC pre-metrics are allowed to violate (report only).
TriangleAudit triangle_violations(const PreMetric& m, double tol = 1e-12);

struct GeometryReport {
  AntiCoreResult anticore;
  std::vector<ExtReal> inertia_profile;  // I^(alpha)(j), j = 1..n
  double alpha = 2.0;
  DiameterResult diam;
  TriangleAudit triangles;
  FourPointResult four_point;
  int inertia_argmax = 0;
};

GeometryReport geometry_report(const ITCMatrix& m, double alpha = 2.0,
                               long long budget = 2'000'000, std::uint64_t seed = 12345);

}  // namespace spinitc
