#ifndef NORMDIST_CONSTRUCTIONS_HPP
#define NORMDIST_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "normdist/distgraph.hpp"
#include "normdist/norms.hpp"
#include "normdist/rng.hpp"

namespace normdist {

// One summand set of a Minkowski-sum construction.
struct MinkowskiFactor {
  enum class Kind { Triangle, Chain, ZeroPair };
  Kind kind;
  std::vector<Vec> summands;         // float view, always populated
  std::vector<QVector> summands_q;   // exact mode only
};

struct ConstructionResult {
  PointSet points;
  long promised_edges = 0;
  std::vector<MinkowskiFactor> factors;
  uint64_t seed = 0;
};

namespace detail {

inline QVector random_rational_direction(Rng& rng, int d, long max_num = 9, long max_den = 5) {
  for (;;) {
    QVector v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.next_rational(max_num, max_den);
    if (!v.is_zero()) return v;
  }
}

inline QVector random_exact_unit(Rng& rng, const PolytopeNorm& poly) {
  return poly.boundary_point_exact(random_rational_direction(rng, poly.dim()));
}

inline Vec random_float_unit(Rng& rng, const Norm& norm) {
  for (;;) {
    Vec v(static_cast<size_t>(norm.dim()));
    for (double& c : v) c = 2 * rng.next_double() - 1;
    if (vnorm2(v) > 1e-3) return boundary_point(norm, v);
  }
}

inline bool all_distinct_exact(std::vector<QVector> pts) {
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

inline bool all_distinct_float(const std::vector<Vec>& pts, double tol) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (vdist(pts[i], pts[j]) <= tol) return false;
  return true;
}

}  // namespace detail

// All 2^k subset sums of k random unit vectors; the hypercube graph Q_k
// embeds into the unit distance graph. promised = k 2^{k-1} edges.
inline ConstructionResult hypercube_embedding(const Norm& norm, int k, uint64_t seed,
                                              int retries = 64, double tol = kDefaultTol) {
  if (k < 1) throw std::invalid_argument("hypercube_embedding: k must be >= 1");
  if (k > 24) throw std::invalid_argument("hypercube_embedding: k too large");
  Rng rng(seed);
  const size_t n = size_t{1} << k;
  const bool exact = norm.is_polytope();

  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<MinkowskiFactor> factors;
    if (exact) {
      const PolytopeNorm& poly = norm.polytope_data();
      std::vector<QVector> units;
      for (int i = 0; i < k; ++i) units.push_back(detail::random_exact_unit(rng, poly));
      std::vector<QVector> pts(n, QVector(poly.dim()));
      for (size_t mask = 1; mask < n; ++mask) {
        int low = std::countr_zero(mask);
        pts[mask] = pts[mask & (mask - 1)] + units[static_cast<size_t>(low)];
      }
      if (!detail::all_distinct_exact(pts)) continue;
      for (const QVector& u : units) {
        MinkowskiFactor f{MinkowskiFactor::Kind::ZeroPair, {Vec(static_cast<size_t>(poly.dim()), 0.0), u.to_doubles()}, {QVector(poly.dim()), u}};
        factors.push_back(std::move(f));
      }
      return ConstructionResult{PointSet::exact(poly.dim(), std::move(pts)),
                                static_cast<long>(k) * static_cast<long>(n / 2), std::move(factors), seed};
    }
    std::vector<Vec> units;
    for (int i = 0; i < k; ++i) units.push_back(detail::random_float_unit(rng, norm));
    std::vector<Vec> pts(n, Vec(static_cast<size_t>(norm.dim()), 0.0));
    for (size_t mask = 1; mask < n; ++mask) {
      int low = std::countr_zero(mask);
      pts[mask] = vadd(pts[mask & (mask - 1)], units[static_cast<size_t>(low)]);
    }
    if (!detail::all_distinct_float(pts, tol)) continue;
    for (const Vec& u : units)
      factors.push_back(MinkowskiFactor{MinkowskiFactor::Kind::ZeroPair,
                                        {Vec(static_cast<size_t>(norm.dim()), 0.0), u},
                                        {}});
    return ConstructionResult{PointSet::floating(norm.dim(), std::move(pts), tol),
                              static_cast<long>(k) * static_cast<long>(n / 2), std::move(factors), seed};
  }
  throw std::runtime_error("hypercube_embedding: retry budget exhausted (degenerate norm data)");
}

// For x on the unit circle of a strictly convex 2-norm, finds y with
// ||y|| = ||y - x|| = 1 by bisection on the boundary angle. At offset 0 the
// distance is 0, at offset pi it is 2, so the bracket is valid.
inline Vec unit_circle_partner(const Norm& norm, const Vec& x, double tol = 1e-9) {
  if (norm.dim() != 2) throw std::invalid_argument("unit_circle_partner: 2-norms only");
  if (!norm.strictly_convex())
    throw std::invalid_argument("unit_circle_partner: norm must be strictly convex");
  if (std::abs(norm.value(x) - 1.0) > 1e-7)
    throw std::invalid_argument("unit_circle_partner: x must have norm 1");
  double phi0 = std::atan2(x[1], x[0]);
  auto g = [&](double theta) {
    return norm.value(vsub(boundary_at_angle(norm, phi0 + theta), x)) - 1.0;
  };
  double lo = 0, hi = std::numbers::pi;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  Vec y = boundary_at_angle(norm, phi0 + 0.5 * (lo + hi));
  if (std::abs(norm.value(y) - 1.0) > tol || std::abs(norm.value(vsub(y, x)) - 1.0) > tol)
    throw std::runtime_error("unit_circle_partner: bisection failed to converge");
  return y;
}

// Minkowski sum of k unit-side triangles {0, x_i, y_i}; all 3^k sums distinct.
// promised = k 3^k edges.
inline ConstructionResult triangle_power(const Norm& norm, int k, uint64_t seed, int retries = 64,
                                         double tol = kDefaultTol) {
  if (norm.dim() != 2) throw std::invalid_argument("triangle_power: 2-norms only");
  if (!norm.strictly_convex())
    throw std::invalid_argument("triangle_power: norm must be strictly convex");
  if (k < 0) throw std::invalid_argument("triangle_power: k must be >= 0");
  Rng rng(seed);
  std::vector<Vec> pts = {Vec{0.0, 0.0}};
  std::vector<MinkowskiFactor> factors;
  long pow3 = 1;
  for (int i = 1; i <= k; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt <= retries; ++attempt) {
      double phi = 2 * std::numbers::pi * rng.next_double();
      Vec x = boundary_at_angle(norm, phi);
      Vec y = unit_circle_partner(norm, x);
      std::vector<Vec> grown;
      grown.reserve(pts.size() * 3);
      for (const Vec& p : pts) {
        grown.push_back(p);
        grown.push_back(vadd(p, x));
        grown.push_back(vadd(p, y));
      }
      if (!detail::all_distinct_float(grown, tol)) continue;
      pts = std::move(grown);
      factors.push_back(MinkowskiFactor{MinkowskiFactor::Kind::Triangle, {Vec{0.0, 0.0}, x, y}, {}});
      placed = true;
      break;
    }
    if (!placed) throw std::runtime_error("triangle_power: retry budget exhausted");
    pow3 *= 3;
  }
  return ConstructionResult{PointSet::floating(2, std::move(pts), tol),
                            static_cast<long>(k) * pow3, std::move(factors), seed};
}

// Base-3 composition: digit a_i of n contributes a_i translated copies of the
// 3^i triangle power. promised = sum a_i * i * 3^i >= (k - 3/2) n.
inline ConstructionResult compose_base3(const Norm& norm, long n, uint64_t seed, int retries = 64,
                                        double tol = kDefaultTol) {
  if (n < 1) throw std::invalid_argument("compose_base3: n must be >= 1");
  if (norm.dim() != 2 || !norm.strictly_convex())
    throw std::invalid_argument("compose_base3: strictly convex 2-norms only");
  std::vector<int> digits;  // digits[i] = a_i
  for (long rest = n; rest > 0; rest /= 3) digits.push_back(static_cast<int>(rest % 3));

  Rng rng(seed);
  std::vector<std::vector<Vec>> blocks(digits.size());
  std::vector<MinkowskiFactor> factors;
  long promised = 0;
  double extent = 1.0;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    ConstructionResult block = triangle_power(norm, static_cast<int>(i), rng.next_u64(), retries, tol);
    blocks[i] = block.points.fpoints();
    for (auto& f : block.factors) factors.push_back(std::move(f));
    promised += static_cast<long>(digits[i]) * static_cast<long>(i) * block.points.size();
    for (const Vec& p : blocks[i]) extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
  }

  double shift = 4 * extent + 4;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(n));
    for (size_t i = 0; i < digits.size(); ++i) {
      for (int c = 0; c < digits[i]; ++c) {
        Vec t = {shift * (2 * rng.next_double() - 1), shift * (2 * rng.next_double() - 1)};
        for (const Vec& p : blocks[i]) pts.push_back(vadd(p, t));
      }
    }
    if (!detail::all_distinct_float(pts, tol)) continue;
    return ConstructionResult{PointSet::floating(2, std::move(pts), tol), promised,
                              std::move(factors), seed};
  }
  throw std::runtime_error("compose_base3: retry budget exhausted");
}

// Seeded samples on the circle {z : ||z - c1||_2 = ||z - c2||_2 = 1} in R^3.
inline std::vector<Vec> sphere_intersection_samples(const Vec& c1, const Vec& c2, int m,
                                                    uint64_t seed) {
  if (c1.size() != 3 || c2.size() != 3)
    throw std::invalid_argument("sphere_intersection_samples: points must be 3-dimensional");
  Vec w = vsub(c2, c1);
  double dist = vnorm2(w);
  if (dist == 0) throw std::invalid_argument("sphere_intersection_samples: c1 = c2");
  if (dist >= 2)
    throw std::invalid_argument(
        "sphere_intersection_samples: ||c1-c2|| >= 2, intersection empty or a single point");
  Vec mid = vscale(0.5, vadd(c1, c2));
  double r = std::sqrt(1.0 - 0.25 * dist * dist);
  // In-plane orthonormal basis perpendicular to w.
  Vec axis = std::abs(w[0]) <= std::abs(w[1]) && std::abs(w[0]) <= std::abs(w[2]) ? Vec{1, 0, 0}
             : std::abs(w[1]) <= std::abs(w[2])                                   ? Vec{0, 1, 0}
                                                                                  : Vec{0, 0, 1};
  Vec e = cross3(w, axis);
  e = vscale(1.0 / vnorm2(e), e);
  Vec f = cross3(w, e);
  f = vscale(1.0 / vnorm2(f), f);
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    double a = 2 * std::numbers::pi * rng.next_double();
    out.push_back(vadd(mid, vadd(vscale(r * std::cos(a), e), vscale(r * std::sin(a), f))));
  }
  return out;
}

// K_{d-1,m}-based construction: scale chains {x_i,...,k x_i} Minkowski-added
// to pairs {0, z_j}, where every z_j is at unit distance from every x_i.
// promised = (d-1) m (k-1) k^{d-2} 2^{m-1} edges.
inline ConstructionResult bipartite_construction(const Norm& norm, int d, int k, int m,
                                                 uint64_t seed, int retries = 64,
                                                 double tol = kDefaultTol) {
  if (k < 2 || m < 1) throw std::invalid_argument("bipartite_construction: need k >= 2, m >= 1");
  if (norm.dim() != d) throw std::invalid_argument("bipartite_construction: dimension mismatch");
  if (d != 2 && d != 3)
    throw std::invalid_argument("bipartite_construction: d must be 2 or 3");
  if (d == 3 && norm.kind() != Norm::Kind::Euclidean)
    throw std::invalid_argument("bipartite_construction: d = 3 requires the Euclidean norm");
  if (m > 20) throw std::invalid_argument("bipartite_construction: m too large");

  long promised = static_cast<long>(d - 1) * m * (k - 1);
  for (int i = 0; i < d - 2; ++i) promised *= k;
  promised *= (1L << (m - 1));
  const size_t subsets = size_t{1} << m;

  Rng rng(seed);
  if (d == 2 && norm.is_polytope()) {
    const PolytopeNorm& poly = norm.polytope_data();
    for (int attempt = 0; attempt <= retries; ++attempt) {
      QVector x1 = detail::random_exact_unit(rng, poly);
      std::vector<QVector> zs;
      for (int j = 0; j < m; ++j) zs.push_back(x1 + detail::random_exact_unit(rng, poly));
      std::vector<QVector> pts;
      pts.reserve(static_cast<size_t>(k) * subsets);
      for (int a = 1; a <= k; ++a) {
        QVector base = Rational(a) * x1;
        for (size_t mask = 0; mask < subsets; ++mask) {
          QVector p = base;
          for (int j = 0; j < m; ++j)
            if (mask >> j & 1) p = p + zs[static_cast<size_t>(j)];
          pts.push_back(std::move(p));
        }
      }
      if (!detail::all_distinct_exact(pts)) continue;
      std::vector<MinkowskiFactor> factors;
      MinkowskiFactor chain{MinkowskiFactor::Kind::Chain, {}, {}};
      for (int a = 1; a <= k; ++a) {
        chain.summands_q.push_back(Rational(a) * x1);
        chain.summands.push_back(chain.summands_q.back().to_doubles());
      }
      factors.push_back(std::move(chain));
      for (const QVector& z : zs)
        factors.push_back(MinkowskiFactor{MinkowskiFactor::Kind::ZeroPair,
                                          {Vec{0.0, 0.0}, z.to_doubles()},
                                          {QVector(2), z}});
      return ConstructionResult{PointSet::exact(2, std::move(pts)), promised, std::move(factors),
                                seed};
    }
    throw std::runtime_error("bipartite_construction: retry budget exhausted");
  }

  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<Vec> xs;  // x_1 .. x_{d-1}
    std::vector<Vec> zs;
    if (d == 2) {
      xs.push_back(detail::random_float_unit(rng, norm));
      for (int j = 0; j < m; ++j)
        zs.push_back(vadd(xs[0], detail::random_float_unit(rng, norm)));
    } else {
      Vec x1 = detail::random_float_unit(rng, norm);
      Vec x2 = detail::random_float_unit(rng, norm);
      double sep = vdist(x1, x2);
      if (sep <= 0.2 || sep >= 1.8) continue;
      xs = {x1, x2};
      zs = sphere_intersection_samples(x1, x2, m, rng.next_u64());
    }
    std::vector<Vec> pts;
    pts.reserve(static_cast<size_t>(std::pow(k, d - 1)) * subsets);
    std::vector<int> scales(static_cast<size_t>(d - 1), 1);
    for (;;) {
      Vec base(static_cast<size_t>(d), 0.0);
      for (int i = 0; i < d - 1; ++i)
        base = vadd(base, vscale(static_cast<double>(scales[static_cast<size_t>(i)]), xs[static_cast<size_t>(i)]));
      for (size_t mask = 0; mask < subsets; ++mask) {
        Vec p = base;
        for (int j = 0; j < m; ++j)
          if (mask >> j & 1) p = vadd(p, zs[static_cast<size_t>(j)]);
        pts.push_back(std::move(p));
      }
      int pos = 0;
      while (pos < d - 1 && ++scales[static_cast<size_t>(pos)] > k) scales[static_cast<size_t>(pos++)] = 1;
      if (pos == d - 1) break;
    }
    if (!detail::all_distinct_float(pts, tol)) continue;
    std::vector<MinkowskiFactor> factors;
    for (const Vec& x : xs) {
      MinkowskiFactor chain{MinkowskiFactor::Kind::Chain, {}, {}};
      for (int a = 1; a <= k; ++a) chain.summands.push_back(vscale(a, x));
      factors.push_back(std::move(chain));
    }
    for (const Vec& z : zs)
      factors.push_back(
          MinkowskiFactor{MinkowskiFactor::Kind::ZeroPair, {Vec(static_cast<size_t>(d), 0.0), z}, {}});
    return ConstructionResult{PointSet::floating(d, std::move(pts), tol), promised,
                              std::move(factors), seed};
  }
  throw std::runtime_error("bipartite_construction: retry budget exhausted");
}

}  // namespace normdist

#endif  // NORMDIST_CONSTRUCTIONS_HPP
