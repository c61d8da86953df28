#ifndef NORMDIST_HULL_HPP
#define NORMDIST_HULL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace normdist {

using Vec = std::vector<double>;

inline double vdot(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double vnorm2(const Vec& a) { return std::sqrt(vdot(a, a)); }

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vscale(double c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec vneg(const Vec& a) { return vscale(-1.0, a); }

inline double vdist(const Vec& a, const Vec& b) { return vnorm2(vsub(a, b)); }

inline Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Monotone-chain convex hull; returns hull vertices in counterclockwise
// order. Points within `tol` of a hull edge are merged away.
inline std::vector<Vec> convex_hull_2d(std::vector<Vec> pts, double tol = 1e-9) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const Vec& a, const Vec& b) { return vdist(a, b) <= tol; }),
            pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && turn(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Triangle of an incremental 3D hull, indices into the point list.
struct HullTri {
  int a, b, c;
};

// Incremental convex hull in 3D (float arithmetic). Returns triangles with
// outward orientation. Input must affinely span R^3.
inline std::vector<HullTri> convex_hull_3d(const std::vector<Vec>& pts, double tol = 1e-9) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw std::invalid_argument("convex_hull_3d: need at least 4 points");

  auto tri_normal = [&](const HullTri& t) {
    return cross3(vsub(pts[t.b], pts[t.a]), vsub(pts[t.c], pts[t.a]));
  };

  // Initial tetrahedron: spread-out seed points.
  int i0 = 0, i1 = -1;
  double best = -1;
  for (int i = 1; i < n; ++i) {
    double d = vdist(pts[i], pts[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (best <= tol) throw std::invalid_argument("convex_hull_3d: degenerate input");
  int i2 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    double d = vnorm2(cross3(vsub(pts[i1], pts[i0]), vsub(pts[i], pts[i0])));
    if (d > best) best = d, i2 = i;
  }
  if (best <= tol) throw std::invalid_argument("convex_hull_3d: collinear input");
  Vec nrm = cross3(vsub(pts[i1], pts[i0]), vsub(pts[i2], pts[i0]));
  int i3 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    double d = std::abs(vdot(nrm, vsub(pts[i], pts[i0])));
    if (d > best) best = d, i3 = i;
  }
  if (best <= tol) throw std::invalid_argument("convex_hull_3d: coplanar input");

  std::vector<HullTri> faces;
  auto add_face = [&](int a, int b, int c, const Vec& inside) {
    HullTri t{a, b, c};
    Vec nn = tri_normal(t);
    if (vdot(nn, vsub(inside, pts[a])) > 0) std::swap(t.b, t.c);
    faces.push_back(t);
  };
  Vec centroid(3, 0.0);
  for (int i : {i0, i1, i2, i3}) centroid = vadd(centroid, vscale(0.25, pts[i]));
  add_face(i0, i1, i2, centroid);
  add_face(i0, i1, i3, centroid);
  add_face(i0, i2, i3, centroid);
  add_face(i1, i2, i3, centroid);

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    // Faces visible from pts[p].
    std::vector<char> vis(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f) {
      Vec nn = tri_normal(faces[f]);
      double off = vdot(nn, vsub(pts[p], pts[faces[f].a]));
      if (off > tol * std::max(1.0, vnorm2(nn))) vis[f] = 1, any = true;
    }
    if (!any) continue;
    // Horizon = edges shared by exactly one visible face.
    std::vector<std::pair<int, int>> horizon;
    auto edge_key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;  // key -> directed edge of visible face
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!vis[f]) continue;
      const HullTri& t = faces[f];
      int vs[3][2] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
      for (auto& e : vs) edges.push_back({edge_key(e[0], e[1]), {e[0], e[1]}});
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i < edges.size();) {
      size_t j = i;
      while (j < edges.size() && edges[j].first == edges[i].first) ++j;
      if (j - i == 1) horizon.push_back(edges[i].second);
      i = j;
    }
    std::vector<HullTri> next;
    for (size_t f = 0; f < faces.size(); ++f)
      if (!vis[f]) next.push_back(faces[f]);
    for (auto& [a, b] : horizon) next.push_back(HullTri{a, b, p});
    faces.swap(next);
    // Repair orientation of the new fan against the current interior point.
    for (size_t f = faces.size() - horizon.size(); f < faces.size(); ++f) {
      Vec nn = tri_normal(faces[f]);
      if (vdot(nn, vsub(centroid, pts[faces[f].a])) > 0) std::swap(faces[f].b, faces[f].c);
    }
  }
  return faces;
}

}  // namespace normdist

#endif  // NORMDIST_HULL_HPP
