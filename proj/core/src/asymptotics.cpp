#include "spinitc/asymptotics.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spinitc/errors.hpp"

namespace spinitc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDualAgreementSlack = 1e-10;

int dyadic_valuation(long long x) {
  return std::countr_zero(static_cast<unsigned long long>(std::abs(x)));
}

void check_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-3) {
    throw std::invalid_argument("series tolerance must lie in (0, 1e-3], got " +
                                std::to_string(tol));
  }
}

constexpr long long kMaxPosition = 1'000'000'000'000LL;

void check_magnitude(long long i, long long j) {
  if (i < -kMaxPosition || i > kMaxPosition || j < -kMaxPosition || j > kMaxPosition) {
    throw std::invalid_argument("positions are limited to |x| <= 1e12");
  }
}

// x cot x for x = pi / (den * u), zero by case when the argument is pi/2.
double xcot_term(long long u, long long den) {
  if (den * u == 2) return 0.0;
  const double x = kPi / static_cast<double>(den * u);
  return x / std::tan(x);
}

// Closed form shared by the semi-infinite (den = 2) formula and both
// doubly-infinite branches (den = 2 or 4):
//   (8/pi^2) [ i^2 t(i) - j^2 t(j) ] / (i^2 - j^2),  t(u) = (pi/den u) cot(pi/den u).
double closed_form(long long bi, long long bj, long long den) {
  const double i2 = static_cast<double>(bi) * static_cast<double>(bi);
  const double j2 = static_cast<double>(bj) * static_cast<double>(bj);
  return 8.0 / (kPi * kPi) * (i2 * xcot_term(bi, den) - j2 * xcot_term(bj, den)) / (i2 - j2);
}

// Series (4/pi^2)(2 + sum_{m = step, 2 step, ...} 4/((m^2 i^2 - 1)(m^2 j^2 - 1))),
// truncated when the remaining tail is provably below tol.
//
// Tail bound: for m >= M, (m^2 u^2 - 1) >= u^2 (m^2 - 1) and (m^2-1)^2 >= (m-1)^4,
// so each term is at most 4 / (i^2 j^2 (m-1)^4); comparing the lattice
// m = M, M+step, ... with the integral of x^-4 gives
//   tail <= 4 / (3 step i^2 j^2 (M - step - 1)^3).
SeriesValue sum_series(long long bi, long long bj, long long step, double tol) {
  const double scale = 4.0 / (kPi * kPi);
  const double ii = static_cast<double>(bi) * static_cast<double>(bi);
  const double jj = static_cast<double>(bj) * static_cast<double>(bj);
  constexpr long long kMaxTerms = 20'000'000;
  double s = 0.0;
  long long terms = 0;
  long long m = step;
  double tail;
  while (true) {
    const double mm = static_cast<double>(m) * static_cast<double>(m);
    s += 4.0 / ((mm * ii - 1.0) * (mm * jj - 1.0));
    ++terms;
    const long long next = m + step;
    const double base = static_cast<double>(next - step - 1);
    tail = base >= 1.0 ? scale * 4.0 / (3.0 * static_cast<double>(step) * ii * jj *
                                        base * base * base)
                       : tol + 1.0;
    if (tail <= tol) break;
    if (terms >= kMaxTerms) {
      throw ConvergenceError("series truncation: tolerance " + std::to_string(tol) +
                             " not certified within " + std::to_string(kMaxTerms) +
                             " terms (bound reached " + std::to_string(tail) + ")");
    }
    m = next;
  }
  return SeriesValue{scale * (2.0 + s), tail, terms};
}

ReducedPair make_reduced(long long i, long long j, Frame frame) {
  ReducedPair p;
  p.i_raw = i;
  p.j_raw = j;
  p.frame = frame;
  p.reflected = (i < 0) || (j < 0);
  const long long ia = std::abs(i);
  const long long ja = std::abs(j);
  p.equal_magnitude = (ia == ja);
  p.g = std::gcd(ia, ja);
  p.i_red = ia / p.g;
  p.j_red = ja / p.g;
  if (frame == Frame::kDoublyInfinite) {
    p.parity = dyadic_valuation(ia) == dyadic_valuation(ja)
                   ? ParityClass::kEqualDyadicValuation
                   : ParityClass::kUnequalDyadicValuation;
  }
  return p;
}

AsymptoticValue exact_value(double v, ReducedPair pair, AsymptoticSpecial special) {
  AsymptoticValue out;
  out.value = out.series = out.closed = v;
  out.tail_bound = 0.0;
  out.pair = pair;
  out.special = special;
  return out;
}

}  // namespace

ReducedPair reduce_pair(long long i, long long j, Frame frame) {
  check_magnitude(i, j);
  if (frame == Frame::kSemiInfinite) {
    if (i < 1 || j < 1) {
      throw std::invalid_argument("reduce_pair: semi-infinite positions must be >= 1");
    }
  } else if (i == 0 || j == 0) {
    throw std::invalid_argument(
        "reduce_pair: doubly-infinite positions must be nonzero (the centre column "
        "is handled by doubly_infinite_pmax)");
  }
  return make_reduced(i, j, frame);
}

SeriesValue semi_infinite_pmax_series(const ReducedPair& p, double tol) {
  check_tol(tol);
  if (p.frame != Frame::kSemiInfinite) {
    throw std::invalid_argument("semi_infinite_pmax_series: pair is not semi-infinite");
  }
  return sum_series(p.i_red, p.j_red, 2, tol);
}

double semi_infinite_pmax_closed(const ReducedPair& p) {
  if (p.frame != Frame::kSemiInfinite) {
    throw std::invalid_argument("semi_infinite_pmax_closed: pair is not semi-infinite");
  }
  if (p.i_red == p.j_red) {
    throw std::invalid_argument(
        "semi_infinite_pmax_closed: undefined for i = j (the exact value there is 1)");
  }
  return closed_form(p.i_red, p.j_red, 2);
}

AsymptoticValue semi_infinite_pmax(long long i, long long j, double tol) {
  check_tol(tol);
  ReducedPair pair = reduce_pair(i, j, Frame::kSemiInfinite);
  if (pair.i_red == pair.j_red) {
    return exact_value(1.0, pair, AsymptoticSpecial::kIdentity);
  }
  const SeriesValue series = semi_infinite_pmax_series(pair, tol);
  const double closed = semi_infinite_pmax_closed(pair);
  if (std::abs(series.value - closed) > tol + kDualAgreementSlack) {
    throw CrossCheckError("semi-infinite dual representations disagree for (" +
                          std::to_string(i) + ", " + std::to_string(j) + "): series " +
                          std::to_string(series.value) + " vs closed " + std::to_string(closed));
  }
  AsymptoticValue out;
  out.value = closed;
  out.series = series.value;
  out.closed = closed;
  out.tail_bound = series.tail_bound;
  out.pair = pair;
  return out;
}

AsymptoticValue doubly_infinite_pmax(long long i_rel, long long j_rel, double tol) {
  check_tol(tol);
  check_magnitude(i_rel, j_rel);
  if (i_rel == 0 && j_rel == 0) {
    throw std::invalid_argument("doubly_infinite_pmax: (0, 0) has no defined pair value");
  }
  if (i_rel == 0 || j_rel == 0) {
    return exact_value(2.0 / kPi, make_reduced(i_rel, j_rel, Frame::kDoublyInfinite),
                       AsymptoticSpecial::kCenter);
  }
  ReducedPair pair = reduce_pair(i_rel, j_rel, Frame::kDoublyInfinite);
  if (i_rel == j_rel) {
    return exact_value(1.0, pair, AsymptoticSpecial::kIdentity);
  }
  if (pair.equal_magnitude) {
    // i = -j reflects onto the identity case; flagged for output metadata.
    return exact_value(1.0, pair, AsymptoticSpecial::kReflectedIdentity);
  }
  const bool equal_valuation = pair.parity == ParityClass::kEqualDyadicValuation;
  const long long step = equal_valuation ? 2 : 4;
  const long long den = equal_valuation ? 2 : 4;
  const SeriesValue series = sum_series(pair.i_red, pair.j_red, step, tol);
  const double closed = closed_form(pair.i_red, pair.j_red, den);
  if (std::abs(series.value - closed) > tol + kDualAgreementSlack) {
    throw CrossCheckError("doubly-infinite dual representations disagree for (" +
                          std::to_string(i_rel) + ", " + std::to_string(j_rel) + "): series " +
                          std::to_string(series.value) + " vs closed " + std::to_string(closed));
  }
  AsymptoticValue out;
  out.value = closed;
  out.series = series.value;
  out.closed = closed;
  out.tail_bound = series.tail_bound;
  out.pair = pair;
  return out;
}

DiameterConstants diameter_constants() {
  DiameterConstants c;
  c.semi_floor_pmax = 64.0 / (kPi * kPi * kPi * kPi);
  c.doubly_floor_sqrt = 8.0 / (kPi * kPi);
  c.center_sqrt = 2.0 / kPi;
  c.doubly_diameter = -2.0 * std::log(2.0 / kPi);
  return c;
}

double zeta_identity_check(long long m_cutoff) {
  if (m_cutoff < 2 || m_cutoff % 2 != 0) {
    throw std::invalid_argument("zeta_identity_check: cutoff must be even and >= 2");
  }
  double s = 0.0;
  for (long long m = 2; m <= m_cutoff; m += 2) {
    const double mm = static_cast<double>(m) * static_cast<double>(m) - 1.0;
    s += 16.0 / (mm * mm);
  }
  return s;
}

}  // namespace spinitc
