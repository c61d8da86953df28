#ifndef NORMDIST_NORMS_HPP
#define NORMDIST_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "normdist/hull.hpp"
#include "normdist/qlinalg.hpp"
#include "normdist/rational.hpp"

namespace normdist {

constexpr double kDefaultTol = 1e-9;

// One facet pair |normal . x| <= offset of a 0-symmetric polytope.
struct Facet {
  QVector normal;
  Rational offset;
};

// Canonical form: integer normal with coprime entries, first nonzero entry
// positive, offset rescaled to match.
inline Facet canonical_facet(QVector o, Rational t) {
  if (o.is_zero()) throw std::invalid_argument("facet: zero normal");
  if (!(Rational(0) < t)) throw std::invalid_argument("facet: offset must be positive");
  mpz_class l(1);
  for (int i = 0; i < o.dim(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), o[i].denominator().get_mpz_t());
  mpz_class g(0);
  for (int i = 0; i < o.dim(); ++i) {
    mpz_class num = o[i].numerator() * l / o[i].denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale = Rational(l) / Rational(g);
  o = scale * o;
  t = scale * t;
  o = o.sign_canonical();
  return Facet{std::move(o), std::move(t)};
}

// Norm whose unit ball is the symmetric polytope {x : |o_i . x| <= t_i}.
// Facet data is exact rational; float mirrors are kept for fast screening.
class PolytopeNorm {
 public:
  PolytopeNorm(int d, const std::vector<Facet>& facets) : d_(d) {
    if (d < 1) throw std::invalid_argument("PolytopeNorm: dim must be >= 1");
    if (facets.empty()) throw std::invalid_argument("PolytopeNorm: empty facet list");
    for (const Facet& f : facets) {
      if (f.normal.dim() != d) throw std::invalid_argument("PolytopeNorm: facet dimension mismatch");
      Facet c = canonical_facet(f.normal, f.offset);
      if (std::find_if(facets_.begin(), facets_.end(), [&](const Facet& g) {
            return g.normal == c.normal && g.offset == c.offset;
          }) == facets_.end()) {
        facets_.push_back(std::move(c));
      }
    }
    std::vector<QVector> rows;
    rows.reserve(facets_.size());
    for (const Facet& f : facets_) rows.push_back(f.normal);
    if (rank(rows) != d)
      throw std::invalid_argument("PolytopeNorm: normals do not span R^d (unbounded ball)");
    for (const Facet& f : facets_) {
      fnormals_.push_back(f.normal.to_doubles());
      foffsets_.push_back(f.offset.to_double());
    }
  }

  int dim() const { return d_; }
  const std::vector<Facet>& facets() const { return facets_; }
  int facet_pairs() const { return static_cast<int>(facets_.size()); }
  const std::vector<Vec>& fnormals() const { return fnormals_; }
  const std::vector<double>& foffsets() const { return foffsets_; }

  Rational value_exact(const QVector& x) const {
    if (x.dim() != d_) throw std::invalid_argument("PolytopeNorm: dimension mismatch");
    Rational best(0);
    for (const Facet& f : facets_) {
      Rational v = dot(f.normal, x).abs() / f.offset;
      if (best < v) best = v;
    }
    return best;
  }

  // value_exact(x) == 1, with early exit on the first violated facet.
  bool unit_exact(const QVector& x) const {
    bool tight = false;
    for (const Facet& f : facets_) {
      Rational v = dot(f.normal, x).abs();
      if (f.offset < v) return false;
      if (v == f.offset) tight = true;
    }
    return tight;
  }

  bool inside_exact(const QVector& x) const {
    for (const Facet& f : facets_) {
      if (f.offset < dot(f.normal, x).abs()) return false;
    }
    return true;
  }

  QVector boundary_point_exact(const QVector& x) const {
    Rational v = value_exact(x);
    if (v.is_zero()) throw std::invalid_argument("boundary_point: zero vector");
    return x / v;
  }

  double value(const Vec& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("PolytopeNorm: dimension mismatch");
    double best = 0;
    for (size_t i = 0; i < fnormals_.size(); ++i) {
      double v = std::abs(vdot(fnormals_[i], x)) / foffsets_[i];
      if (v > best) best = v;
    }
    return best;
  }

  // Radius of the largest Euclidean ball inside the unit ball.
  double inradius() const {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < fnormals_.size(); ++i)
      best = std::min(best, foffsets_[i] / vnorm2(fnormals_[i]));
    return best;
  }

  // Exact vertex enumeration, d in {2, 3}. Candidates are intersections of
  // d signed facet hyperplanes, screened in floating point and verified
  // exactly against every facet.
  std::vector<QVector> vertices() const;
  std::vector<Vec> vertices_f() const {
    std::vector<Vec> out;
    for (const QVector& v : vertices()) out.push_back(v.to_doubles());
    return out;
  }

  // Axis-aligned box |x_i| <= 1 (the l_inf unit ball).
  static PolytopeNorm cube(int d) {
    std::vector<Facet> fs;
    for (int i = 0; i < d; ++i) {
      QVector o(d);
      o[i] = Rational(1);
      fs.push_back(Facet{o, Rational(1)});
    }
    return PolytopeNorm(d, fs);
  }

  // Cross-polytope (the l_1 unit ball): all sign patterns of (1,..,1).
  static PolytopeNorm cross(int d) {
    std::vector<Facet> fs;
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
      QVector o(d);
      o[0] = Rational(1);
      for (int i = 1; i < d; ++i) o[i] = Rational((mask >> (i - 1)) & 1 ? 1 : -1);
      fs.push_back(Facet{o, Rational(1)});
    }
    return PolytopeNorm(d, fs);
  }

 private:
  int d_;
  std::vector<Facet> facets_;
  std::vector<Vec> fnormals_;
  std::vector<double> foffsets_;
};

// General norm: exact polytope norm or a smooth (strictly convex) one.
class Norm {
 public:
  enum class Kind { Polytope, Euclidean, Lp, Strictified };

  static Norm polytope(PolytopeNorm p) {
    Norm n(Kind::Polytope, p.dim());
    n.poly_ = std::make_shared<PolytopeNorm>(std::move(p));
    return n;
  }
  static Norm euclidean(int d) { return Norm(Kind::Euclidean, d); }
  static Norm lp(int d, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("Norm::lp: p must be > 1");
    Norm n(Kind::Lp, d);
    n.p_ = p;
    return n;
  }
  static Norm strictified(PolytopeNorm base, double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("Norm::strictified: epsilon must be > 0");
    Norm n(Kind::Strictified, base.dim());
    n.poly_ = std::make_shared<PolytopeNorm>(std::move(base));
    n.eps_ = epsilon;
    return n;
  }

  Kind kind() const { return kind_; }
  int dim() const { return d_; }
  double epsilon() const { return eps_; }
  double p() const { return p_; }
  bool strictly_convex() const { return kind_ != Kind::Polytope; }
  bool is_polytope() const { return kind_ == Kind::Polytope; }

  const PolytopeNorm& polytope_data() const {
    if (kind_ != Kind::Polytope) throw std::logic_error("Norm: not a polytope norm");
    return *poly_;
  }
  const PolytopeNorm& base() const {
    if (kind_ != Kind::Strictified) throw std::logic_error("Norm: not a strictified norm");
    return *poly_;
  }

  double value(const Vec& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("Norm: dimension mismatch");
    switch (kind_) {
      case Kind::Polytope:
        return poly_->value(x);
      case Kind::Euclidean:
        return vnorm2(x);
      case Kind::Lp: {
        double s = 0;
        for (double c : x) s += std::pow(std::abs(c), p_);
        return std::pow(s, 1.0 / p_);
      }
      case Kind::Strictified:
        return poly_->value(x) + eps_ * vnorm2(x);
    }
    return 0;
  }

 private:
  Norm(Kind k, int d) : kind_(k), d_(d) {
    if (d < 1) throw std::invalid_argument("Norm: dim must be >= 1");
  }
  Kind kind_;
  int d_;
  std::shared_ptr<const PolytopeNorm> poly_;
  double eps_ = 0;
  double p_ = 2;
};

// ---------------------------------------------------------------------------
// eval / boundary projection

inline Rational eval_norm(const PolytopeNorm& n, const QVector& x) { return n.value_exact(x); }
inline double eval_norm(const Norm& n, const Vec& x) { return n.value(x); }

inline QVector boundary_point(const PolytopeNorm& n, const QVector& x) {
  return n.boundary_point_exact(x);
}

inline Vec boundary_point(const Norm& n, const Vec& x) {
  double v = n.value(x);
  if (v <= 0) throw std::invalid_argument("boundary_point: zero vector");
  return vscale(1.0 / v, x);
}

// Point on the boundary of a 2-dimensional unit ball in direction angle phi.
inline Vec boundary_at_angle(const Norm& n, double phi) {
  if (n.dim() != 2) throw std::invalid_argument("boundary_at_angle: 2-norms only");
  return boundary_point(n, Vec{std::cos(phi), std::sin(phi)});
}

// Finite boundary sample with a per-point norm residual bound.
struct BoundarySample {
  std::vector<Vec> points;
  double tolerance;
};

inline std::vector<Vec> sample_directions(int d, int count) {
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<size_t>(count));
  if (d == 2) {
    for (int i = 0; i < count; ++i) {
      double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
      dirs.push_back({std::cos(a), std::sin(a)});
    }
  } else if (d == 3) {
    // Fibonacci sphere.
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double a = ga * static_cast<double>(i);
      dirs.push_back({r * std::cos(a), r * std::sin(a), z});
    }
  } else {
    throw std::invalid_argument("sample_directions: d must be 2 or 3");
  }
  return dirs;
}

inline BoundarySample sample_boundary(const Norm& n, int count, double tol = kDefaultTol) {
  BoundarySample s;
  s.tolerance = tol;
  for (const Vec& dir : sample_directions(n.dim(), count)) s.points.push_back(boundary_point(n, dir));
  return s;
}

// ---------------------------------------------------------------------------
// epsilon nets

// Greedy maximal eps-separated subset, kept in input order. Every input point
// ends up within Euclidean distance eps of the output.
inline std::vector<Vec> epsilon_net(const std::vector<Vec>& points, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon_net: eps must be > 0");
  std::vector<Vec> net;
  for (const Vec& p : points) {
    bool separated = true;
    for (const Vec& q : net) {
      if (vdist(p, q) <= eps) {
        separated = false;
        break;
      }
    }
    if (separated) net.push_back(p);
  }
  return net;
}

// ---------------------------------------------------------------------------
// vertex enumeration

namespace detail {

inline std::optional<QVector> intersect_lines_exact(const QVector& a, const Rational& p,
                                                    const QVector& b, const Rational& q) {
  Rational det = a[0] * b[1] - a[1] * b[0];
  if (det.is_zero()) return std::nullopt;
  QVector x(2);
  x[0] = (p * b[1] - q * a[1]) / det;
  x[1] = (a[0] * q - b[0] * p) / det;
  return x;
}

inline std::optional<QVector> intersect_planes_exact(const QVector& a, const Rational& p,
                                                     const QVector& b, const Rational& q,
                                                     const QVector& c, const Rational& r) {
  QMatrix m(3, 3);
  for (int j = 0; j < 3; ++j) {
    m.at(0, j) = a[j];
    m.at(1, j) = b[j];
    m.at(2, j) = c[j];
  }
  Rational det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                 m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                 m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  if (det.is_zero()) return std::nullopt;
  QVector rhs{p, q, r};
  return solve(m, rhs);
}

}  // namespace detail

inline std::vector<QVector> PolytopeNorm::vertices() const {
  if (d_ != 2 && d_ != 3) throw std::invalid_argument("PolytopeNorm::vertices: d must be 2 or 3");
  const int h = facet_pairs();
  std::vector<QVector> out;
  const double slack = 1e-6;
  auto feasible_f = [&](const Vec& x) {
    for (size_t i = 0; i < fnormals_.size(); ++i) {
      if (std::abs(vdot(fnormals_[i], x)) > foffsets_[i] * (1.0 + slack) + slack) return false;
    }
    return true;
  };
  auto accept = [&](const QVector& x) {
    if (inside_exact(x)) out.push_back(x);
  };
  if (d_ == 2) {
    for (int i = 0; i < h; ++i) {
      for (int j = i + 1; j < h; ++j) {
        for (int si = -1; si <= 1; si += 2) {
          for (int sj = -1; sj <= 1; sj += 2) {
            double det = si * fnormals_[i][0] * sj * fnormals_[j][1] -
                         si * fnormals_[i][1] * sj * fnormals_[j][0];
            if (std::abs(det) > 1e-12) {
              Vec xf = {(foffsets_[i] * sj * fnormals_[j][1] - foffsets_[j] * si * fnormals_[i][1]) / det,
                        (si * fnormals_[i][0] * foffsets_[j] - sj * fnormals_[j][0] * foffsets_[i]) / det};
              if (!feasible_f(xf)) continue;
            }
            auto x = detail::intersect_lines_exact(Rational(si) * facets_[i].normal, facets_[i].offset,
                                                   Rational(sj) * facets_[j].normal, facets_[j].offset);
            if (x) accept(*x);
          }
        }
      }
    }
  } else {
    for (int i = 0; i < h; ++i) {
      for (int j = i + 1; j < h; ++j) {
        for (int k = j + 1; k < h; ++k) {
          for (int mask = 0; mask < 8; ++mask) {
            int si = mask & 1 ? -1 : 1, sj = mask & 2 ? -1 : 1, sk = mask & 4 ? -1 : 1;
            auto x = detail::intersect_planes_exact(
                Rational(si) * facets_[i].normal, facets_[i].offset,
                Rational(sj) * facets_[j].normal, facets_[j].offset,
                Rational(sk) * facets_[k].normal, facets_[k].offset);
            if (x && feasible_f(x->to_doubles())) accept(*x);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// point-to-polytope distance

namespace detail {

inline double point_segment_distance(const Vec& x, const Vec& a, const Vec& b, Vec* closest = nullptr) {
  Vec ab = vsub(b, a);
  double len2 = vdot(ab, ab);
  double t = len2 > 0 ? std::clamp(vdot(vsub(x, a), ab) / len2, 0.0, 1.0) : 0.0;
  Vec c = vadd(a, vscale(t, ab));
  if (closest) *closest = c;
  return vdist(x, c);
}

// Vertices of a 2D polytope in counterclockwise order.
inline std::vector<Vec> ordered_polygon(const std::vector<Vec>& verts) {
  std::vector<Vec> v = verts;
  std::sort(v.begin(), v.end(), [](const Vec& a, const Vec& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  return v;
}

}  // namespace detail

// Geometry of a polytope unit ball prepared for distance queries.
struct PolytopeGeometry {
  const PolytopeNorm* norm;
  std::vector<Vec> vertices;            // float copies of the exact vertices
  std::vector<Vec> polygon;             // d=2: ccw boundary cycle
  std::vector<std::vector<Vec>> faces;  // d=3: each signed facet as a vertex cycle
};

inline PolytopeGeometry make_geometry(const PolytopeNorm& p) {
  PolytopeGeometry g;
  g.norm = &p;
  std::vector<QVector> vx = p.vertices();
  for (const QVector& v : vx) g.vertices.push_back(v.to_doubles());
  if (p.dim() == 2) {
    g.polygon = detail::ordered_polygon(g.vertices);
  } else {
    for (const Facet& f : p.facets()) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Rational target = Rational(sign) * f.offset;
        std::vector<Vec> face;
        for (const QVector& v : vx) {
          if (dot(f.normal, v) == target) face.push_back(v.to_doubles());
        }
        if (face.size() < 3) continue;
        // Order around the centroid in an in-plane basis.
        Vec n = f.normal.to_doubles();
        Vec centroid(3, 0.0);
        for (const Vec& v : face) centroid = vadd(centroid, vscale(1.0 / face.size(), v));
        Vec ref = vsub(face[0], centroid);
        Vec e1 = vscale(1.0 / vnorm2(ref), ref);
        Vec e2 = cross3(n, e1);
        e2 = vscale(1.0 / vnorm2(e2), e2);
        std::sort(face.begin(), face.end(), [&](const Vec& a, const Vec& b) {
          Vec da = vsub(a, centroid), db = vsub(b, centroid);
          return std::atan2(vdot(da, e2), vdot(da, e1)) < std::atan2(vdot(db, e2), vdot(db, e1));
        });
        g.faces.push_back(std::move(face));
      }
    }
  }
  return g;
}

// Euclidean distance from x to the polytope; optionally reports the nearest
// point of the polytope.
inline double dist_point_polytope(const PolytopeGeometry& g, const Vec& x, Vec* closest = nullptr) {
  const PolytopeNorm& p = *g.norm;
  if (p.value(x) <= 1.0 + 1e-12) {
    if (closest) *closest = x;
    return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  Vec bestpt;
  if (p.dim() == 2) {
    const std::vector<Vec>& poly = g.polygon;
    for (size_t i = 0; i < poly.size(); ++i) {
      Vec c;
      double d = detail::point_segment_distance(x, poly[i], poly[(i + 1) % poly.size()], &c);
      if (d < best) best = d, bestpt = c;
    }
  } else {
    for (const std::vector<Vec>& face : g.faces) {
      // Distance to the face plane if the projection lands inside the face,
      // else distance to the face boundary.
      Vec n = cross3(vsub(face[1], face[0]), vsub(face[2], face[0]));
      double nn = vdot(n, n);
      double off = vdot(n, vsub(x, face[0]));
      Vec proj = vsub(x, vscale(off / nn, n));
      bool inside = true;
      for (size_t i = 0; i < face.size() && inside; ++i) {
        Vec a = face[i], b = face[(i + 1) % face.size()];
        Vec edge = vsub(b, a);
        Vec outward = cross3(edge, n);
        if (vdot(outward, vsub(proj, a)) > 0) inside = false;
      }
      if (inside) {
        double d = std::abs(off) / std::sqrt(nn);
        if (d < best) best = d, bestpt = proj;
      } else {
        for (size_t i = 0; i < face.size(); ++i) {
          Vec c;
          double d = detail::point_segment_distance(x, face[i], face[(i + 1) % face.size()], &c);
          if (d < best) best = d, bestpt = c;
        }
      }
    }
  }
  if (closest) *closest = bestpt;
  return best;
}

// ---------------------------------------------------------------------------
// Hausdorff distance

// Hausdorff distance between two polytope unit balls. Both directed parts are
// maxima over vertices (distance to a convex body is a convex function, so
// the maximum over the body sits at a vertex).
inline double hausdorff_distance(const PolytopeNorm& p, const PolytopeNorm& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
  if (p.dim() > 3) throw std::invalid_argument("hausdorff_distance: d must be 2 or 3");
  PolytopeGeometry gp = make_geometry(p), gq = make_geometry(q);
  double best = 0;
  for (const Vec& v : gp.vertices) best = std::max(best, dist_point_polytope(gq, v));
  for (const Vec& v : gq.vertices) best = std::max(best, dist_point_polytope(gp, v));
  return best;
}

namespace detail {

inline double dist_point_ball(const Norm& n, const Vec& x, const std::vector<Vec>& boundary) {
  double v = n.value(x);
  if (v <= 1.0 + 1e-12) return 0.0;
  if (n.kind() == Norm::Kind::Euclidean) return vnorm2(x) - 1.0;
  double best = vdist(x, vscale(1.0 / v, x));  // radial upper bound
  for (const Vec& b : boundary) best = std::min(best, vdist(x, b));
  return best;
}

}  // namespace detail

// Hausdorff distance between arbitrary unit balls. Exact-vertex based for
// polytope sides; boundary-sampled (`samples` directions) for smooth sides,
// so smooth results carry an O(1/samples) sampling error.
inline double hausdorff_distance(const Norm& a, const Norm& b, int samples = 4096) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hausdorff_distance: dimension mismatch");
  if (a.is_polytope() && b.is_polytope())
    return hausdorff_distance(a.polytope_data(), b.polytope_data());

  auto rep_points = [&](const Norm& n) {
    if (n.is_polytope()) return make_geometry(n.polytope_data()).vertices;
    return sample_boundary(n, samples).points;
  };
  std::optional<PolytopeGeometry> ga, gb;
  std::vector<Vec> ba, bb;
  if (a.is_polytope())
    ga = make_geometry(a.polytope_data());
  else
    ba = sample_boundary(a, samples).points;
  if (b.is_polytope())
    gb = make_geometry(b.polytope_data());
  else
    bb = sample_boundary(b, samples).points;

  double best = 0;
  for (const Vec& v : rep_points(a)) {
    double d = b.is_polytope() ? dist_point_polytope(*gb, v) : detail::dist_point_ball(b, v, bb);
    best = std::max(best, d);
  }
  for (const Vec& v : rep_points(b)) {
    double d = a.is_polytope() ? dist_point_polytope(*ga, v) : detail::dist_point_ball(a, v, ba);
    best = std::max(best, d);
  }
  return best;
}

// ---------------------------------------------------------------------------
// strictification

// Adds eps * ||x||_2 to a polytope norm with eps = mu / c^2, where c bounds
// the Euclidean radius of the base ball. The perturbed ball B' is strictly
// convex, B' subset of B, and d_H(B, B') <= mu.
inline Norm strictify(const PolytopeNorm& base, double mu) {
  if (!(mu > 0)) throw std::invalid_argument("strictify: mu must be > 0");
  double c;
  if (base.dim() == 2) {
    c = 0;
    for (const Vec& v : base.vertices_f()) c = std::max(c, vnorm2(v));
  } else if (base.dim() == 3) {
    c = 0;
    for (const Vec& bpt : sample_boundary(Norm::polytope(base), 8192).points)
      c = std::max(c, vnorm2(bpt));
  } else {
    throw std::invalid_argument("strictify: d must be 2 or 3");
  }
  return Norm::strictified(base, mu / (c * c));
}

// ---------------------------------------------------------------------------
// polytope approximation with small facets

struct ApproxResult {
  std::optional<PolytopeNorm> poly;
  double max_facet_diameter = 0;
  double hausdorff = 0;  // directed, sampled from the smooth ball
  int halvings = 0;
};

struct ApproxConfig {
  int samples_2d = 4096;
  int samples_3d = 8192;
  double tol = kDefaultTol;
  int max_halvings = 6;
};

namespace detail {

inline Facet facet_from_edge(const QVector& a, const QVector& b) {
  QVector n{b[1] - a[1], a[0] - b[0]};
  Rational t = dot(n, a);
  if (t.sign() < 0) {
    n = -n;
    t = -t;
  }
  if (t.is_zero()) throw std::runtime_error("facet_from_edge: edge through origin");
  return canonical_facet(n, t);
}

inline QVector rationalize(const Vec& v) {
  std::vector<Rational> e;
  e.reserve(v.size());
  for (double c : v) e.push_back(Rational::from_double(c));
  return QVector(std::move(e));
}

}  // namespace detail

// Lemma-2.3 style approximation: dense boundary sample -> eps-net ->
// symmetrize -> convex hull -> facet inequalities. The compactness constant
// of the lemma is replaced by a post-hoc facet-diameter check with geometric
// eps halving.
inline ApproxResult approximate_polytope_detailed(const Norm& norm, double mu, int d,
                                                  const ApproxConfig& cfg = {}) {
  if (d != 2 && d != 3) throw std::invalid_argument("approximate_polytope: d must be 2 or 3");
  if (norm.dim() != d) throw std::invalid_argument("approximate_polytope: dimension mismatch");
  if (!norm.strictly_convex())
    throw std::invalid_argument("approximate_polytope: norm must be strictly convex");
  if (!(mu > 0)) throw std::invalid_argument("approximate_polytope: mu must be > 0");

  std::vector<Vec> samples = sample_boundary(norm, d == 2 ? cfg.samples_2d : cfg.samples_3d).points;

  ApproxResult res;
  double eps = mu / 4.0;
  for (int attempt = 0; attempt <= cfg.max_halvings; ++attempt, eps /= 2.0) {
    res.halvings = attempt;
    std::vector<Vec> net = epsilon_net(samples, eps);
    std::vector<Vec> pts = net;
    for (const Vec& p : net) pts.push_back(vneg(p));

    std::vector<Facet> facets;
    double max_diam = 0;
    std::vector<std::vector<Vec>> face_cycles;
    if (d == 2) {
      std::vector<Vec> hull = convex_hull_2d(pts, cfg.tol);
      if (hull.size() < 3) continue;
      for (size_t i = 0; i < hull.size(); ++i) {
        const Vec& a = hull[i];
        const Vec& b = hull[(i + 1) % hull.size()];
        max_diam = std::max(max_diam, vdist(a, b));
        facets.push_back(detail::facet_from_edge(detail::rationalize(a), detail::rationalize(b)));
      }
      face_cycles.push_back(hull);
    } else {
      std::vector<HullTri> tris = convex_hull_3d(pts, cfg.tol);
      // Group triangles by their exact supporting plane, kept SIGNED
      // (o . x = t with t > 0) so that a facet and its antipode stay
      // separate for the diameter measurement.
      std::vector<QVector> rpts;
      rpts.reserve(pts.size());
      for (const Vec& p : pts) rpts.push_back(detail::rationalize(p));
      struct PlaneGroup {
        QVector normal;  // integer-primitive, oriented with positive offset
        Rational offset;
        std::vector<int> verts;
      };
      std::vector<PlaneGroup> groups;
      for (const HullTri& t : tris) {
        QVector u = rpts[t.b] - rpts[t.a], v = rpts[t.c] - rpts[t.a];
        QVector n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        if (n.is_zero()) continue;
        Rational off = dot(n, rpts[t.a]);
        if (off.sign() < 0) {
          n = -n;
          off = -off;
        }
        if (off.is_zero()) throw std::runtime_error("approximate_polytope: face through origin");
        // Scale-only canonicalisation (no sign flip): primitive integer normal.
        Facet sc = canonical_facet(n, off);
        if (dot(sc.normal, rpts[t.a]).sign() < 0) sc.normal = -sc.normal;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const PlaneGroup& g) {
          return g.normal == sc.normal && g.offset == sc.offset;
        });
        if (it == groups.end()) {
          groups.push_back(PlaneGroup{sc.normal, sc.offset, {t.a, t.b, t.c}});
        } else {
          for (int idx : {t.a, t.b, t.c})
            if (std::find(it->verts.begin(), it->verts.end(), idx) == it->verts.end())
              it->verts.push_back(idx);
        }
      }
      for (const PlaneGroup& g : groups) {
        facets.push_back(canonical_facet(g.normal, g.offset));
        for (size_t i = 0; i < g.verts.size(); ++i)
          for (size_t j = i + 1; j < g.verts.size(); ++j)
            max_diam = std::max(max_diam, vdist(pts[g.verts[i]], pts[g.verts[j]]));
      }
    }

    if (max_diam >= mu) continue;  // facets too large; retry with finer net

    PolytopeNorm poly(d, facets);
    // Directed Hausdorff from the smooth ball; the hull sits inside the ball,
    // so the other direction is zero.
    double dh = 0;
    for (const Vec& s : samples) {
      double v = poly.value(s);
      if (v > 1.0) {
        // Outside: measure against the facet planes (lower bound is exact
        // enough here since facets are tiny); fall back to radial gap.
        dh = std::max(dh, vdist(s, vscale(1.0 / v, s)));
      }
    }
    if (dh >= mu) continue;
    res.poly = std::move(poly);
    res.max_facet_diameter = max_diam;
    res.hausdorff = dh;
    return res;
  }
  throw std::runtime_error("approximate_polytope: facet-diameter target unreachable within retry budget");
}

inline PolytopeNorm approximate_polytope(const Norm& norm, double mu, int d, const ApproxConfig& cfg = {}) {
  return *approximate_polytope_detailed(norm, mu, d, cfg).poly;
}

// ---------------------------------------------------------------------------
// boundary witness (Lemma 2.4 cases)

// Given x on the boundary of P, produces y on the boundary of Q with
// ||x - y||_2 <= d_H(P, Q) + tol. Radial scaling is tried first; if it
// overshoots, falls back to the three cases of the lemma.
inline Vec boundary_witness(const PolytopeNorm& p, const PolytopeNorm& q, const Vec& x,
                            double tol = kDefaultTol) {
  double vp = p.value(x);
  if (std::abs(vp - 1.0) > 1e-6)
    throw std::invalid_argument("boundary_witness: x is not on the boundary of P");
  double dh = hausdorff_distance(p, q);
  double vq = q.value(x);
  if (std::abs(vq - 1.0) <= 1e-15) return x;

  Vec radial = vscale(1.0 / vq, x);
  if (vdist(x, radial) <= dh + tol) return radial;

  if (vq > 1.0) {
    // Outside Q: nearest point of Q is on its boundary and within d_H.
    PolytopeGeometry gq = make_geometry(q);
    Vec y;
    dist_point_polytope(gq, x, &y);
    return y;
  }
  // Interior of Q: walk along the outward normal of the supporting facet of P
  // at x until hitting the boundary of Q.
  const auto& fn = p.fnormals();
  const auto& fo = p.foffsets();
  size_t best_i = 0;
  double best_v = -1;
  for (size_t i = 0; i < fn.size(); ++i) {
    double v = std::abs(vdot(fn[i], x)) / fo[i];
    if (v > best_v) best_v = v, best_i = i;
  }
  Vec dir = fn[best_i];
  if (vdot(dir, x) < 0) dir = vneg(dir);
  dir = vscale(1.0 / vnorm2(dir), dir);
  double lo = 0, hi = 1;
  while (q.value(vadd(x, vscale(hi, dir))) < 1.0) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = (lo + hi) / 2;
    (q.value(vadd(x, vscale(mid, dir))) < 1.0 ? lo : hi) = mid;
  }
  return vadd(x, vscale(hi, dir));
}

}  // namespace normdist

#endif  // NORMDIST_NORMS_HPP
