#ifndef NORMDIST_DISTGRAPH_HPP
#define NORMDIST_DISTGRAPH_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "normdist/norms.hpp"
#include "normdist/qlinalg.hpp"

namespace normdist {

enum class Mode { Exact, Float };

// Finite set of distinct points, exact-rational or floating.
class PointSet {
 public:
  static PointSet exact(int d, std::vector<QVector> pts) {
    PointSet ps(d, Mode::Exact);
    for (const QVector& p : pts) {
      if (p.dim() != d) throw std::invalid_argument("PointSet: dimension mismatch");
    }
    std::vector<QVector> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("PointSet: points must be distinct");
    ps.qpts_ = std::move(pts);
    for (const QVector& p : ps.qpts_) ps.fpts_.push_back(p.to_doubles());
    return ps;
  }

  static PointSet floating(int d, std::vector<Vec> pts, double tol = kDefaultTol) {
    PointSet ps(d, Mode::Float);
    for (const Vec& p : pts) {
      if (static_cast<int>(p.size()) != d) throw std::invalid_argument("PointSet: dimension mismatch");
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (vdist(pts[i], pts[j]) <= tol)
          throw std::invalid_argument("PointSet: points must be distinct (within tolerance)");
    ps.fpts_ = std::move(pts);
    return ps;
  }

  int dim() const { return d_; }
  Mode mode() const { return mode_; }
  int size() const { return static_cast<int>(fpts_.size()); }
  const std::vector<QVector>& qpoints() const {
    if (mode_ != Mode::Exact) throw std::logic_error("PointSet: not in exact mode");
    return qpts_;
  }
  const std::vector<Vec>& fpoints() const { return fpts_; }

  PointSet to_float(double tol = kDefaultTol) const { return floating(d_, fpts_, tol); }

  PointSet translated_exact(const QVector& t) const {
    std::vector<QVector> moved;
    moved.reserve(qpoints().size());
    for (const QVector& p : qpts_) moved.push_back(p + t);
    return exact(d_, std::move(moved));
  }

 private:
  PointSet(int d, Mode m) : d_(d), mode_(m) {
    if (d < 1) throw std::invalid_argument("PointSet: dim must be >= 1");
  }
  int d_;
  Mode mode_;
  std::vector<QVector> qpts_;
  std::vector<Vec> fpts_;
};

// Edges grouped by canonical direction (unit difference vector up to sign).
struct DirectionClass {
  QVector exact_key{Rational(0)};  // populated in exact mode
  Vec float_key;                   // representative in float mode
  std::vector<int> edge_ids;
};

struct UnitDistanceGraph {
  int n = 0;
  Mode mode = Mode::Float;
  std::vector<std::pair<int, int>> edges;  // x < y
  std::vector<DirectionClass> direction_classes;
  std::vector<double> residuals;  // float mode: | ||p_x - p_y|| - 1 | per edge
  long edge_count() const { return static_cast<long>(edges.size()); }
};

// Unit-distance graph of a point set. Exact mode (rational points + polytope
// norm) decides ||p_x - p_y|| = 1 exactly, with a float screen to skip pairs
// that are nowhere near unit distance.
inline UnitDistanceGraph build_udg(const PointSet& ps, const Norm& norm, double tol = kDefaultTol) {
  if (ps.dim() != norm.dim()) throw std::invalid_argument("build_udg: dimension mismatch");
  if (ps.size() == 0) throw std::invalid_argument("build_udg: empty point set");
  UnitDistanceGraph g;
  g.n = ps.size();
  g.mode = ps.mode();

  if (ps.mode() == Mode::Exact) {
    if (!norm.is_polytope())
      throw std::invalid_argument("build_udg: exact mode requires a polytope norm");
    const PolytopeNorm& poly = norm.polytope_data();
    const auto& pts = ps.qpoints();
    const auto& fpts = ps.fpoints();
    std::map<QVector, std::vector<int>> classes;
    const double screen = 1e-6;
    for (int x = 0; x < g.n; ++x) {
      for (int y = x + 1; y < g.n; ++y) {
        Vec df = vsub(fpts[static_cast<size_t>(x)], fpts[static_cast<size_t>(y)]);
        if (std::abs(poly.value(df) - 1.0) > screen) continue;
        QVector diff = pts[static_cast<size_t>(x)] - pts[static_cast<size_t>(y)];
        if (!poly.unit_exact(diff)) continue;
        int id = static_cast<int>(g.edges.size());
        g.edges.emplace_back(x, y);
        g.residuals.push_back(0.0);
        classes[diff.sign_canonical()].push_back(id);
      }
    }
    for (auto& [key, ids] : classes) {
      DirectionClass dc;
      dc.exact_key = key;
      dc.float_key = key.to_doubles();
      dc.edge_ids = std::move(ids);
      g.direction_classes.push_back(std::move(dc));
    }
  } else {
    const auto& fpts = ps.fpoints();
    auto canonical_dir = [&](Vec u) {
      for (double c : u) {
        if (std::abs(c) > 1e-7) {
          if (c < 0) u = vneg(u);
          break;
        }
      }
      return u;
    };
    for (int x = 0; x < g.n; ++x) {
      for (int y = x + 1; y < g.n; ++y) {
        Vec diff = vsub(fpts[static_cast<size_t>(x)], fpts[static_cast<size_t>(y)]);
        double v = norm.value(diff);
        if (std::abs(v - 1.0) > tol) continue;
        int id = static_cast<int>(g.edges.size());
        g.edges.emplace_back(x, y);
        g.residuals.push_back(std::abs(v - 1.0));
        Vec key = canonical_dir(vscale(1.0 / v, diff));
        bool placed = false;
        for (DirectionClass& dc : g.direction_classes) {
          if (vdist(dc.float_key, key) <= 1e-6) {
            dc.edge_ids.push_back(id);
            placed = true;
            break;
          }
        }
        if (!placed) {
          DirectionClass dc;
          dc.float_key = key;
          dc.edge_ids.push_back(id);
          g.direction_classes.push_back(std::move(dc));
        }
      }
    }
  }
  return g;
}

// Deduplicated multiset of pairwise distances.
struct DistanceSpectrum {
  Mode mode = Mode::Float;
  std::vector<std::pair<Rational, long>> exact_values;  // strictly increasing
  std::vector<std::pair<double, long>> float_values;    // tol-clustered

  long distinct() const {
    return static_cast<long>(mode == Mode::Exact ? exact_values.size() : float_values.size());
  }
  long total() const {
    long t = 0;
    if (mode == Mode::Exact)
      for (const auto& [v, c] : exact_values) t += c;
    else
      for (const auto& [v, c] : float_values) t += c;
    return t;
  }
};

inline DistanceSpectrum distance_spectrum(const PointSet& ps, const Norm& norm,
                                          double tol = kDefaultTol) {
  if (ps.dim() != norm.dim()) throw std::invalid_argument("distance_spectrum: dimension mismatch");
  DistanceSpectrum s;
  s.mode = ps.mode();
  const int n = ps.size();
  if (ps.mode() == Mode::Exact) {
    if (!norm.is_polytope())
      throw std::invalid_argument("distance_spectrum: exact mode requires a polytope norm");
    const PolytopeNorm& poly = norm.polytope_data();
    const auto& pts = ps.qpoints();
    std::map<Rational, long> vals;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        ++vals[poly.value_exact(pts[static_cast<size_t>(x)] - pts[static_cast<size_t>(y)])];
    s.exact_values.assign(vals.begin(), vals.end());
  } else {
    const auto& fpts = ps.fpoints();
    std::vector<double> all;
    all.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        all.push_back(norm.value(vsub(fpts[static_cast<size_t>(x)], fpts[static_cast<size_t>(y)])));
    std::sort(all.begin(), all.end());
    // Cluster by splitting at gaps larger than tol.
    for (size_t i = 0; i < all.size();) {
      size_t j = i + 1;
      while (j < all.size() && all[j] - all[j - 1] <= tol) ++j;
      s.float_values.emplace_back(all[i], static_cast<long>(j - i));
      i = j;
    }
  }
  return s;
}

// Reference lines from the two headline bounds: e <= (d/2) n log2 n for unit
// distances and the n - O(d n^{3/4}) floor for distinct distances.
struct CeilingReport {
  long n = 0;
  long edges = 0;
  double ceiling = 0;  // (d/2) n log2 n
  bool ceiling_ok = true;
  long distinct = 0;
  long floor_n_minus_1 = 0;
  double floor_paper = 0;  // n - d * n^{3/4}
};

inline CeilingReport check_ceilings(const UnitDistanceGraph& g, const DistanceSpectrum& spectrum,
                                    int d) {
  CeilingReport r;
  r.n = g.n;
  r.edges = g.edge_count();
  r.ceiling = g.n > 0 ? 0.5 * d * static_cast<double>(g.n) * std::log2(static_cast<double>(g.n)) : 0.0;
  r.ceiling_ok = static_cast<double>(r.edges) <= r.ceiling + 1e-9;
  r.distinct = spectrum.distinct();
  r.floor_n_minus_1 = r.n > 0 ? r.n - 1 : 0;
  r.floor_paper = static_cast<double>(r.n) - d * std::pow(static_cast<double>(r.n), 0.75);
  return r;
}

}  // namespace normdist

#endif  // NORMDIST_DISTGRAPH_HPP
