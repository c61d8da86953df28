#ifndef NORMDIST_TESTUTIL_HPP
#define NORMDIST_TESTUTIL_HPP

#include <vector>

#include "normdist/distgraph.hpp"
#include "normdist/norms.hpp"
#include "normdist/rng.hpp"

namespace normdist::testutil {

inline QVector qv(std::initializer_list<long> xs) {
  std::vector<Rational> e;
  for (long x : xs) e.emplace_back(x);
  return QVector(std::move(e));
}

// Random bounded symmetric polytope norm with h facet pairs.
inline PolytopeNorm random_polytope_norm(Rng& rng, int d, int h) {
  for (;;) {
    std::vector<Facet> fs;
    for (int i = 0; i < h; ++i) {
      QVector o(d);
      do {
        for (int j = 0; j < d; ++j) o[j] = rng.next_rational(6, 3);
      } while (o.is_zero());
      fs.push_back(Facet{o, Rational(static_cast<long>(rng.next_int(2, 6)), 3)});
    }
    try {
      return PolytopeNorm(d, fs);
    } catch (const std::invalid_argument&) {
      // normals failed to span; redraw
    }
  }
}

// n distinct random rational points.
inline PointSet random_rational_points(Rng& rng, int n, int d, long max_num = 9, long max_den = 5) {
  for (;;) {
    std::vector<QVector> pts;
    for (int i = 0; i < n; ++i) {
      QVector p(d);
      for (int j = 0; j < d; ++j) p[j] = rng.next_rational(max_num, max_den);
      pts.push_back(std::move(p));
    }
    std::vector<QVector> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      return PointSet::exact(d, std::move(pts));
  }
}

// Arithmetic progression along a rational direction.
inline PointSet arithmetic_progression(int n, int d, const QVector& step, const QVector& start) {
  std::vector<QVector> pts;
  QVector p = start;
  for (int i = 0; i < n; ++i) {
    pts.push_back(p);
    p = p + step;
  }
  return PointSet::exact(d, std::move(pts));
}

}  // namespace normdist::testutil

#endif  // NORMDIST_TESTUTIL_HPP
