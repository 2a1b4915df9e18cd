#include "spinitc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "spinitc/chain.hpp"

namespace spinitc {
namespace {

long long quadruple_count(long long n) {
  if (n < 4) return 0;
  return n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
}

// Half-gap of the three pair sums of one quadruple; negative infinity when a
// distance is infinite so callers can skip.
double quad_delta(const PreMetric& m, int a, int b, int c, int d) {
  const ExtReal ab = m.at(a, b), cd = m.at(c, d);
  const ExtReal ac = m.at(a, c), bd = m.at(b, d);
  const ExtReal ad = m.at(a, d), bc = m.at(b, c);
  if (!ab.finite() || !cd.finite() || !ac.finite() || !bd.finite() || !ad.finite() ||
      !bc.finite()) {
    return -std::numeric_limits<double>::infinity();
  }
  double s1 = ab.value() + cd.value();
  double s2 = ac.value() + bd.value();
  double s3 = ad.value() + bc.value();
  if (s1 < s2) std::swap(s1, s2);
  if (s1 < s3) std::swap(s1, s3);
  if (s2 < s3) std::swap(s2, s3);
  return (s1 - s2) / 2.0;
}

}  // namespace

AntiCoreResult find_anticore(const PreMetric& m) {
  const int n = m.n;
  const int omega = center_index(n);  // rejects even n
  AntiCoreResult res;
  res.omega = omega;
  res.holds = true;

  std::map<int, int> argmax_counts;
  for (int i = 1; i <= n; ++i) {
    if (i == omega) continue;
    ExtReal best = m.at(i, 1);
    int best_j = 1;
    bool tie_with_omega = false;
    for (int j = 2; j <= n; ++j) {
      const ExtReal dij = m.at(i, j);
      if (dij > best) {
        best = dij;
        best_j = j;
      } else if (dij == best && j == omega && best_j != omega) {
        best_j = omega;  // tie broken toward the centre
        tie_with_omega = true;
      }
    }
    if (tie_with_omega) res.tied_rows.push_back(i);
    ++argmax_counts[best_j];
    if (best_j != omega) {
      res.holds = false;
      res.violations.emplace_back(i, best_j);
    }
  }

  int best_count = -1;
  for (const auto& [j, count] : argmax_counts) {
    if (count > best_count) {
      best_count = count;
      res.majority_argmax = j;
    }
  }
  return res;
}

AntiCoreResult find_anticore(const ITCMatrix& m) { return find_anticore(m.distance); }

FourPointResult four_point_delta(const PreMetric& m, long long budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("four_point_delta: budget must be positive");
  const int n = m.n;
  FourPointResult res;
  res.seed = seed;
  const long long total = quadruple_count(n);
  res.exhaustive = total <= budget;

  auto consider = [&](int a, int b, int c, int d) {
    ++res.scanned;
    const double v = quad_delta(m, a, b, c, d);
    if (v == -std::numeric_limits<double>::infinity()) {
      ++res.skipped_infinite;
      return;
    }
    if (v > res.delta) {
      res.delta = v;
      res.quad = {a, b, c, d};
    }
  };

  if (res.exhaustive) {
    for (int a = 1; a <= n - 3; ++a)
      for (int b = a + 1; b <= n - 2; ++b)
        for (int c = b + 1; c <= n - 1; ++c)
          for (int d = c + 1; d <= n; ++d) consider(a, b, c, d);
    return res;
  }

  // Seeded sampling; plain modulo keeps the draw identical across standard
  // libraries, which uniform_int_distribution would not.
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1; };
  for (long long s = 0; s < budget; ++s) {
    int idx[4];
    int have = 0;
    while (have < 4) {
      const int candidate = draw();
      bool dup = false;
      for (int u = 0; u < have; ++u) dup = dup || idx[u] == candidate;
      if (!dup) idx[have++] = candidate;
    }
    std::sort(idx, idx + 4);
    consider(idx[0], idx[1], idx[2], idx[3]);
  }
  return res;
}

PathProductReport path_product_bound_check(const ITCMatrix& m, int i, int j, int segments,
                                           long long trials, std::uint64_t seed) {
  const int n = m.n;
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("path_product_bound_check: endpoint out of range");
  }
  if (segments < 2 || segments > n) {
    throw std::invalid_argument("path_product_bound_check: segments must lie in [2, N]");
  }
  const int free_slots = segments - 2;
  const int omega = (n % 2 == 1) ? (n + 1) / 2 : 0;

  std::vector<double> sq(static_cast<size_t>(n) * n);
  for (size_t idx = 0; idx < sq.size(); ++idx) sq[idx] = std::sqrt(m.pmax[idx]);
  auto s_at = [&](int a, int b) { return sq[static_cast<size_t>(a - 1) * n + (b - 1)]; };

  PathProductReport rep;
  rep.lhs = s_at(i, j);

  double omega_sum = 0.0;
  auto accumulate = [&](const std::vector<int>& ks) {
    double prod = 1.0;
    int prev = i;
    bool visits_omega = false;
    for (int k : ks) {
      prod *= s_at(prev, k);
      visits_omega = visits_omega || k == omega;
      prev = k;
    }
    prod *= s_at(prev, j);
    rep.rhs += prod;
    if (visits_omega) omega_sum += prod;
    ++rep.terms;
  };

  double total_count = 1.0;
  for (int s = 0; s < free_slots; ++s) total_count *= n;
  rep.exhaustive = total_count <= 2e6;

  std::vector<int> ks(free_slots, 1);
  if (free_slots == 0) {
    accumulate(ks);
  } else if (rep.exhaustive) {
    // odometer over all n^free_slots intermediate sequences
    while (true) {
      accumulate(ks);
      int pos = free_slots - 1;
      while (pos >= 0 && ks[pos] == n) {
        ks[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++ks[pos];
    }
  } else {
    if (trials < 1) {
      throw std::invalid_argument(
          "path_product_bound_check: trials must be positive when the sequence space "
          "exceeds the exhaustive budget");
    }
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
      for (int s = 0; s < free_slots; ++s) {
        ks[s] = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
      }
      accumulate(ks);
    }
  }

  rep.margin = rep.rhs - rep.lhs;
  rep.omega_share = rep.rhs > 0.0 ? omega_sum / rep.rhs : 0.0;
  return rep;
}

DiameterResult diameter(const PreMetric& m) {
  DiameterResult res;
  for (int i = 1; i <= m.n; ++i) {
    for (int j = i + 1; j <= m.n; ++j) {
      const ExtReal d = m.at(i, j);
      if (res.i == 0 || d > res.value) {
        res.value = d;
        res.i = i;
        res.j = j;
      }
    }
  }
  return res;
}

DiameterResult diameter(const ITCMatrix& m) { return diameter(m.distance); }

TriangleAudit triangle_violations(const PreMetric& m, double tol) {
  TriangleAudit audit;
  const int n = m.n;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      const ExtReal dik = m.at(i, k);
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == k) continue;
        const double side = (m.at(i, j) + m.at(j, k)).value();
        if (dik.value() > side + tol) {
          const double excess = dik.value() - side;
          audit.violations.push_back({i, j, k, excess});
          audit.max_excess = std::max(audit.max_excess, excess);
        }
      }
    }
  }
  return audit;
}

GeometryReport geometry_report(const ITCMatrix& m, double alpha, long long budget,
                               std::uint64_t seed) {
  GeometryReport rep;
  rep.alpha = alpha;
  rep.anticore = find_anticore(m);
  rep.inertia_profile.reserve(m.n);
  for (int j = 1; j <= m.n; ++j) rep.inertia_profile.push_back(inertia(m, j, alpha));
  rep.inertia_argmax = 1;
  for (int j = 2; j <= m.n; ++j) {
    if (rep.inertia_profile[j - 1] > rep.inertia_profile[rep.inertia_argmax - 1]) {
      rep.inertia_argmax = j;
    }
  }
  rep.diam = diameter(m);
  rep.triangles = triangle_violations(m.distance);
  rep.four_point = four_point_delta(m.distance, budget, seed);
  return rep;
}

}  // namespace spinitc
