#pragma once

namespace spinitc {

// Which infinite-chain limit a position pair lives in: anchored at the left
// end (positions >= 1) or at the centre (signed positions relative to omega).
enum class Frame { kSemiInfinite, kDoublyInfinite };

// Doubly-infinite case split. Equal 2-adic valuation of the raw positions
// covers "both odd" together with "both even with the same power of 2"; the
// remaining combinations (different powers of 2, or odd paired with even)
// have unequal valuation. The valuation class selects the series step
// (m = 2,4,... vs m = 4,8,...) and the cotangent argument (pi/2x vs pi/4x).
enum class ParityClass { kEqualDyadicValuation, kUnequalDyadicValuation };

// gcd-reduced, parity-classified position pair. Negative doubly-infinite
// positions are reflected to positive before reduction; equal magnitudes with
// mixed signs are flagged since the asymptotic formulas treat them via that
// reflection.
struct ReducedPair {
  long long i_raw = 0;
  long long j_raw = 0;
  long long g = 1;      // gcd(|i_raw|, |j_raw|)
  long long i_red = 1;  // |i_raw|/g
  long long j_red = 1;  // |j_raw|/g
  Frame frame = Frame::kSemiInfinite;
  ParityClass parity = ParityClass::kEqualDyadicValuation;
  bool reflected = false;        // some raw coordinate was negative
  bool equal_magnitude = false;  // |i_raw| == |j_raw|
};

ReducedPair reduce_pair(long long i, long long j, Frame frame);

// Truncated series evaluation with a certified remainder bound.
struct SeriesValue {
  double value = 0.0;       // sqrt(p_max)
  double tail_bound = 0.0;  // rigorous bound on the truncation error of value
  long long terms = 0;      // number of series terms summed
};

// Semi-infinite chain, series form:
//   sqrt(p_max) = (4/pi^2) (2 + sum_{m=2,4,...} 4/((m^2 j^2 - 1)(m^2 i^2 - 1)))
// over the reduced pair. Terms are positive and O(m^-4); summation stops once
// the integral tail bound drops below tol. Requires tol in (0, 1e-3].
SeriesValue semi_infinite_pmax_series(const ReducedPair& p, double tol);

// Semi-infinite chain, closed form:
//   sqrt(p_max) = (8/pi^2) [ i^2/(i^2-j^2) (pi/2i) cot(pi/2i)
//                          - j^2/(i^2-j^2) (pi/2j) cot(pi/2j) ]
// over the reduced pair. cot(pi/2) = 0, so a reduced coordinate of 1
// contributes exactly nothing; that term is taken as 0 by case instead of
// evaluating cot at its zero. Requires i_red != j_red (the i = j value is
// exactly 1 and bypasses the formula).
double semi_infinite_pmax_closed(const ReducedPair& p);

enum class AsymptoticSpecial {
  kNone,               // generic pair, both representations evaluated
  kIdentity,           // i = j: exact value 1
  kCenter,             // i = 0 or j = 0: exact value 2/pi
  kReflectedIdentity,  // i = -j: reflected to the identity case, value 1
};

struct AsymptoticValue {
  double value = 0.0;   // authoritative result: closed form, or the exact special value
  double series = 0.0;  // series evaluation (equal to value for special cases)
  double closed = 0.0;
  double tail_bound = 0.0;
  ReducedPair pair;
  AsymptoticSpecial special = AsymptoticSpecial::kNone;
};

// Doubly-infinite chain with signed positions relative to the centre.
// (0,0) is rejected; one zero coordinate gives 2/pi; equal magnitudes give 1.
// Otherwise the valuation class picks the series step and cotangent argument,
// both representations are evaluated, and a disagreement beyond tol + 1e-10
// raises CrossCheckError. Requires tol in (0, 1e-3].
AsymptoticValue doubly_infinite_pmax(long long i_rel, long long j_rel, double tol);

// Matching record for the semi-infinite frame so callers can serialise both
// routes uniformly. i = j is exact (special kIdentity); positions must be >= 1.
AsymptoticValue semi_infinite_pmax(long long i, long long j, double tol);

struct DiameterConstants {
  double semi_floor_pmax;    // 64/pi^4, lower bound on semi-infinite p_max
  double doubly_floor_sqrt;  // 8/pi^2, lower bound on doubly-infinite sqrt(p_max), i',j' != 0
  double center_sqrt;        // 2/pi, the centre column value
  double doubly_diameter;    // -2 log(2/pi)
};
DiameterConstants diameter_constants();

// Partial sum of 16/(m^2-1)^2 over even m <= m_cutoff; converges to pi^2 - 8.
double zeta_identity_check(long long m_cutoff);

}  // namespace spinitc
