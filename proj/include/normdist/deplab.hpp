#ifndef NORMDIST_DEPLAB_HPP
#define NORMDIST_DEPLAB_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "normdist/distgraph.hpp"
#include "normdist/qlinalg.hpp"

namespace normdist {

// ---------------------------------------------------------------------------
// span audit

// Outcome of the span audit: does some subset I of the vectors Q-span at
// least d|I| + m + 1 of them?
struct SpanAuditReport {
  bool clean = true;
  int d = 0;
  int m = 0;
  std::vector<int> witness;  // generating subset I when violated (0-based)
  std::vector<int> spanned;  // indices l with u_l in span(I)
};

class AuditViolationError : public std::runtime_error {
 public:
  explicit AuditViolationError(SpanAuditReport r)
      : std::runtime_error("span audit violated: a subset of size " +
                           std::to_string(r.witness.size()) + " spans " +
                           std::to_string(r.spanned.size()) + " of the vectors"),
        report(std::move(r)) {}
  SpanAuditReport report;
};

// Exhaustive search for a violating subset. Subsets are pruned to flats: the
// span of I decides the count, and every flat has an independent generating
// subset of size rank(flat), which realises the strongest form of the bound.
// Enumeration is over independent subsets; distinct flats are deduplicated by
// their membership mask.
inline SpanAuditReport span_audit(const std::vector<QVector>& vectors, int d, int m,
                                  int exhaustive_limit = 20, bool allow_large = false) {
  if (d < 1 || m < 0) throw std::invalid_argument("span_audit: need d >= 1, m >= 0");
  SpanAuditReport rep;
  rep.d = d;
  rep.m = m;
  const int k = static_cast<int>(vectors.size());
  if (k == 0) return rep;
  for (const QVector& v : vectors) {
    if (v.is_zero()) throw std::invalid_argument("span_audit: vectors must be nonzero");
    if (v.dim() != vectors[0].dim()) throw std::invalid_argument("span_audit: dimension mismatch");
  }
  if (k > exhaustive_limit && !allow_large)
    throw std::invalid_argument("span_audit: k exceeds the exhaustive budget (pass allow_large)");
  if (k > 62) throw std::invalid_argument("span_audit: k too large for mask enumeration");

  const int ambient = rank(vectors);
  if (ambient == k) return rep;  // independent family: every span contains only I itself

  std::set<uint64_t> seen;
  std::vector<int> idx;
  // Lexicographic combinations of each size r = 1..ambient.
  for (int r = 1; r <= ambient; ++r) {
    idx.assign(static_cast<size_t>(r), 0);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      RowBasis basis(vectors[0].dim());
      bool indep = true;
      for (int i : idx) {
        if (!basis.insert(vectors[static_cast<size_t>(i)])) {
          indep = false;
          break;
        }
      }
      if (indep) {
        uint64_t mask = 0;
        for (int l = 0; l < k; ++l)
          if (basis.contains(vectors[static_cast<size_t>(l)])) mask |= uint64_t{1} << l;
        if (seen.insert(mask).second) {
          int count = std::popcount(mask);
          if (count >= d * r + m + 1) {
            rep.clean = false;
            rep.witness = idx;
            for (int l = 0; l < k; ++l)
              if (mask >> l & 1) rep.spanned.push_back(l);
            return rep;
          }
        }
      }
      // next combination
      int pos = r - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == k - r + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < r; ++q)
        idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// greedy independent selection (Lemma 3.5 procedure)

struct GreedySelection {
  std::vector<int> chosen;  // in pick order
  Rational weight_sum;
  Rational bound;  // (sum of weights - m M) / d
};

inline GreedySelection greedy_select(const std::vector<QVector>& vectors,
                                     const std::vector<Rational>& weights, int d, int m,
                                     const Rational& M, int exhaustive_limit = 20,
                                     bool allow_large = false) {
  if (vectors.size() != weights.size())
    throw std::invalid_argument("greedy_select: weights must match vectors");
  for (const Rational& w : weights) {
    if (w.sign() < 0 || M < w)
      throw std::invalid_argument("greedy_select: weights must lie in [0, M]");
  }
  SpanAuditReport audit = span_audit(vectors, d, m, exhaustive_limit, allow_large);
  if (!audit.clean) throw AuditViolationError(std::move(audit));

  std::vector<int> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[static_cast<size_t>(b)] < weights[static_cast<size_t>(a)];  // descending, ties by index
  });

  GreedySelection sel;
  RowBasis basis(vectors.empty() ? 1 : vectors[0].dim());
  Rational total;
  for (const Rational& w : weights) total += w;
  for (int i : order) {
    if (basis.insert(vectors[static_cast<size_t>(i)])) {
      sel.chosen.push_back(i);
      sel.weight_sum += weights[static_cast<size_t>(i)];
    }
  }
  sel.bound = (total - Rational(m) * M) / Rational(d);
  if (sel.weight_sum < sel.bound)
    throw std::logic_error("greedy_select: weight guarantee violated (internal error)");
  return sel;
}

// ---------------------------------------------------------------------------
// forest bound certificate (Lemma 3.3 recursion)

struct ForestCertNode {
  std::vector<int> vertices;
  long edge_count = 0;
  bool connected_split = false;  // true: children are the W_a classes of the red direction
  int red_direction = -1;
  long red_edge_count = 0;
  std::vector<Rational> class_keys;  // red-coordinate per child, parallel to children
  std::vector<ForestCertNode> children;
};

struct ForestCertificate {
  long n = 0;
  long edges = 0;
  double bound = 0;  // (1/2) n log2 n
  bool ok = false;
  ForestCertNode root;
};

namespace detail {

// diff = c * u for some nonzero scalar c?
inline bool parallel_to(const QVector& diff, const QVector& u, Rational* coeff = nullptr) {
  int p = -1;
  for (int i = 0; i < u.dim(); ++i) {
    if (!u[i].is_zero()) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  Rational c = diff[p] / u[p];
  if (c.is_zero()) return false;
  for (int i = 0; i < u.dim(); ++i) {
    if (diff[i] != c * u[i]) return false;
  }
  if (coeff) *coeff = c;
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace detail

namespace detail {

struct ForestEdge {
  int x, y, dir;
  Rational coeff;  // p_x - p_y = coeff * u_dir
};

inline ForestCertNode forest_certify_node(const std::vector<int>& vertices,
                                          const std::vector<int>& edge_ids,
                                          const std::vector<ForestEdge>& all_edges,
                                          const std::vector<std::vector<Rational>>& coords,
                                          int n_dirs) {
  ForestCertNode node;
  node.vertices = vertices;
  node.edge_count = static_cast<long>(edge_ids.size());
  if (vertices.size() <= 1 || edge_ids.empty()) return node;  // leaf

  // Component split.
  std::map<int, int> local;
  for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(vertices.size()));
  for (int id : edge_ids)
    uf.unite(local[all_edges[static_cast<size_t>(id)].x], local[all_edges[static_cast<size_t>(id)].y]);
  std::map<int, std::vector<int>> comps;
  for (size_t i = 0; i < vertices.size(); ++i)
    comps[uf.find(static_cast<int>(i))].push_back(vertices[i]);
  if (comps.size() > 1) {
    for (auto& [root, vs] : comps) {
      std::set<int> inside(vs.begin(), vs.end());
      std::vector<int> sub;
      for (int id : edge_ids)
        if (inside.count(all_edges[static_cast<size_t>(id)].x)) sub.push_back(id);
      node.children.push_back(forest_certify_node(vs, sub, all_edges, coords, n_dirs));
    }
    return node;
  }

  // Connected: pick the direction with the most edges as red.
  node.connected_split = true;
  std::vector<long> per_dir(static_cast<size_t>(n_dirs), 0);
  for (int id : edge_ids) ++per_dir[static_cast<size_t>(all_edges[static_cast<size_t>(id)].dir)];
  node.red_direction =
      static_cast<int>(std::max_element(per_dir.begin(), per_dir.end()) - per_dir.begin());

  // Classes W_a: group by the red coordinate of each vertex.
  std::map<Rational, std::vector<int>> classes;
  for (int v : vertices)
    classes[coords[static_cast<size_t>(v)][static_cast<size_t>(node.red_direction)]].push_back(v);

  size_t max_class = 0;
  for (auto& [key, vs] : classes) max_class = std::max(max_class, vs.size());
  for (auto& [key, vs] : classes) {
    std::set<int> inside(vs.begin(), vs.end());
    std::vector<int> sub;
    for (int id : edge_ids) {
      const ForestEdge& e = all_edges[static_cast<size_t>(id)];
      if (e.dir == node.red_direction) continue;
      if (inside.count(e.x) != inside.count(e.y))
        throw std::logic_error("forest_bound_certify: non-red edge crosses classes");
      if (inside.count(e.x)) sub.push_back(id);
    }
    node.class_keys.push_back(key);
    node.children.push_back(forest_certify_node(vs, sub, all_edges, coords, n_dirs));
  }
  node.red_edge_count = per_dir[static_cast<size_t>(node.red_direction)];
  if (node.red_edge_count > static_cast<long>(vertices.size() - max_class))
    throw std::logic_error("forest_bound_certify: red forest exceeds component bound");
  return node;
}

}  // namespace detail

// Certifies e(G) <= (1/2) n log2 n for a graph whose edges are parallel to
// independent directions, one forest per direction, and returns the recursive
// decomposition as a replayable certificate.
inline ForestCertificate forest_bound_certify(const std::vector<QVector>& points,
                                              const std::vector<QVector>& dirs,
                                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(points.size());
  const int kd = static_cast<int>(dirs.size());
  if (n == 0) throw std::invalid_argument("forest_bound_certify: no points");
  {
    std::vector<QVector> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("forest_bound_certify: points must be distinct");
  }
  if (kd > 0 && rank(dirs) != kd)
    throw std::invalid_argument("forest_bound_certify: directions must be linearly independent");

  std::vector<detail::ForestEdge> fe;
  std::vector<std::string> bad;
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : edges) {
    if (x > y) std::swap(x, y);
    if (x < 0 || y >= n || x == y) throw std::invalid_argument("forest_bound_certify: bad edge ids");
    if (!seen.insert({x, y}).second)
      throw std::invalid_argument("forest_bound_certify: duplicate edge");
    QVector diff = points[static_cast<size_t>(x)] - points[static_cast<size_t>(y)];
    int dir = -1;
    Rational c;
    for (int i = 0; i < kd; ++i) {
      if (detail::parallel_to(diff, dirs[static_cast<size_t>(i)], &c)) {
        dir = i;
        break;
      }
    }
    if (dir < 0) {
      bad.push_back("edge (" + std::to_string(x) + "," + std::to_string(y) +
                    ") is not parallel to any direction");
      continue;
    }
    fe.push_back(detail::ForestEdge{x, y, dir, c});
  }
  if (!bad.empty()) throw std::invalid_argument("forest_bound_certify: " + bad.front());

  // Per-direction forest condition.
  for (int i = 0; i < kd; ++i) {
    detail::UnionFind uf(n);
    for (const auto& e : fe) {
      if (e.dir != i) continue;
      if (!uf.unite(e.x, e.y))
        throw std::invalid_argument("forest_bound_certify: direction " + std::to_string(i) +
                                    " edges contain a cycle (not a forest)");
    }
  }

  // Coordinates of every vertex relative to its component root, in the basis
  // u_1..u_k: p_w = p_z + sum coords[w][i] * u_i.
  std::vector<std::vector<Rational>> coords(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(kd)));
  {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (edge id, other)
    for (size_t id = 0; id < fe.size(); ++id) {
      adj[static_cast<size_t>(fe[id].x)].push_back({static_cast<int>(id), fe[id].y});
      adj[static_cast<size_t>(fe[id].y)].push_back({static_cast<int>(id), fe[id].x});
    }
    std::vector<char> done(static_cast<size_t>(n), 0);
    for (int z = 0; z < n; ++z) {
      if (done[static_cast<size_t>(z)]) continue;
      done[static_cast<size_t>(z)] = 1;
      std::queue<int> q;
      q.push(z);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (auto [id, y] : adj[static_cast<size_t>(x)]) {
          if (done[static_cast<size_t>(y)]) continue;
          done[static_cast<size_t>(y)] = 1;
          const detail::ForestEdge& e = fe[static_cast<size_t>(id)];
          coords[static_cast<size_t>(y)] = coords[static_cast<size_t>(x)];
          // p_x - p_y = c u_dir; crossing from x to y subtracts c when leaving x.
          Rational& slot = coords[static_cast<size_t>(y)][static_cast<size_t>(e.dir)];
          slot = slot + (e.x == x ? -e.coeff : e.coeff);
          q.push(y);
        }
      }
    }
  }

  ForestCertificate cert;
  cert.n = n;
  cert.edges = static_cast<long>(fe.size());
  cert.bound = 0.5 * n * (n > 0 ? std::log2(static_cast<double>(n)) : 0.0);
  std::vector<int> all_vertices(static_cast<size_t>(n));
  std::iota(all_vertices.begin(), all_vertices.end(), 0);
  std::vector<int> all_edges(fe.size());
  std::iota(all_edges.begin(), all_edges.end(), 0);
  cert.root = detail::forest_certify_node(all_vertices, all_edges, fe, coords, kd);
  cert.ok = static_cast<double>(cert.edges) <= cert.bound + 1e-9;
  return cert;
}

// ---------------------------------------------------------------------------
// entropy inequality (Lemma 3.4)

struct EntropyCheckResult {
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
};

inline EntropyCheckResult entropy_check(const std::vector<long>& parts) {
  if (parts.empty()) throw std::invalid_argument("entropy_check: empty input");
  long n = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("entropy_check: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("entropy_check: parts must be sorted descending");
    n += parts[i];
  }
  EntropyCheckResult r;
  double sum = 0;
  for (long p : parts) sum += static_cast<double>(p) * std::log2(static_cast<double>(p));
  r.lhs = static_cast<double>(parts[0]) - 0.5 * sum;
  r.rhs = static_cast<double>(n) - 0.5 * static_cast<double>(n) * std::log2(static_cast<double>(n));
  r.ok = r.lhs >= r.rhs - 1e-12;
  return r;
}

// ---------------------------------------------------------------------------
// certificate replay

namespace detail {

inline bool verify_node(const ForestCertNode& node, const std::vector<ForestEdge>& fe,
                        const std::vector<int>& edge_ids) {
  const long nn = static_cast<long>(node.vertices.size());
  if (node.edge_count != static_cast<long>(edge_ids.size())) return false;
  double bound = nn > 0 ? 0.5 * static_cast<double>(nn) * std::log2(static_cast<double>(nn)) : 0.0;
  if (static_cast<double>(node.edge_count) > bound + 1e-9) return false;
  if (node.children.empty()) return nn <= 1 || node.edge_count == 0;

  // Children must partition the node's vertex set.
  std::set<int> all(node.vertices.begin(), node.vertices.end());
  size_t total = 0;
  for (const ForestCertNode& c : node.children) {
    total += c.vertices.size();
    for (int v : c.vertices)
      if (!all.count(v)) return false;
  }
  if (total != all.size()) return false;

  std::map<int, int> owner;
  for (size_t c = 0; c < node.children.size(); ++c)
    for (int v : node.children[c].vertices) owner[v] = static_cast<int>(c);

  std::vector<std::vector<int>> child_edges(node.children.size());
  long red = 0;
  size_t max_class = 0;
  for (const ForestCertNode& c : node.children) max_class = std::max(max_class, c.vertices.size());
  for (int id : edge_ids) {
    const ForestEdge& e = fe[static_cast<size_t>(id)];
    int cx = owner.at(e.x), cy = owner.at(e.y);
    if (node.connected_split && e.dir == node.red_direction) {
      if (cx == cy) return false;  // red edges must cross classes
      ++red;
      continue;
    }
    if (cx != cy) return false;  // non-red edges stay inside one child
    child_edges[static_cast<size_t>(cx)].push_back(id);
  }
  if (node.connected_split) {
    if (red != node.red_edge_count) return false;
    if (red > nn - static_cast<long>(max_class)) return false;
    std::vector<long> sizes;
    for (const ForestCertNode& c : node.children) sizes.push_back(static_cast<long>(c.vertices.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    if (!entropy_check(sizes).ok) return false;
  } else if (red != 0) {
    return false;
  }
  for (size_t c = 0; c < node.children.size(); ++c)
    if (!verify_node(node.children[c], fe, child_edges[c])) return false;
  return true;
}

}  // namespace detail

// Independent replay of a certificate against the original instance: edge
// directions are recomputed, the decomposition's counting claims rechecked at
// every node, and the entropy inequality reapplied.
inline bool forest_certificate_verify(const ForestCertificate& cert,
                                      const std::vector<QVector>& points,
                                      const std::vector<QVector>& dirs,
                                      const std::vector<std::pair<int, int>>& edges) {
  if (cert.n != static_cast<long>(points.size())) return false;
  if (cert.edges != static_cast<long>(edges.size())) return false;
  std::vector<detail::ForestEdge> fe;
  for (auto [x, y] : edges) {
    if (x > y) std::swap(x, y);
    QVector diff = points[static_cast<size_t>(x)] - points[static_cast<size_t>(y)];
    int dir = -1;
    Rational c;
    for (size_t i = 0; i < dirs.size(); ++i) {
      if (detail::parallel_to(diff, dirs[i], &c)) {
        dir = static_cast<int>(i);
        break;
      }
    }
    if (dir < 0) return false;
    fe.push_back(detail::ForestEdge{x, y, dir, c});
  }
  std::set<int> root_verts(cert.root.vertices.begin(), cert.root.vertices.end());
  if (static_cast<long>(root_verts.size()) != cert.n) return false;
  std::vector<int> ids(fe.size());
  std::iota(ids.begin(), ids.end(), 0);
  if (!detail::verify_node(cert.root, fe, ids)) return false;
  return static_cast<double>(cert.edges) <= cert.bound + 1e-9;
}

// ---------------------------------------------------------------------------
// Ungar direction count (Theorem 3.7)

struct UngarCount {
  long directions = 0;
  bool collinear = false;  // hypothesis of the theorem fails
};

inline UngarCount ungar_directions(const std::vector<QVector>& points) {
  {
    std::vector<QVector> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("ungar_directions: points must be distinct");
  }
  std::set<QVector> lines;
  for (size_t x = 0; x < points.size(); ++x)
    for (size_t y = x + 1; y < points.size(); ++y)
      lines.insert((points[x] - points[y]).line_canonical());
  UngarCount r;
  r.directions = static_cast<long>(lines.size());
  r.collinear = lines.size() <= 1;
  return r;
}

// ---------------------------------------------------------------------------
// matroid partition (Edmonds-Fulkerson)

struct PartitionResult {
  std::vector<std::vector<int>> classes;  // d linearly independent classes
  std::vector<int> remainder;             // at most m indices
};

// Partitions the vectors into d linearly independent classes plus a remainder
// of size <= m, via matroid-union augmenting paths over d copies of the
// linear matroid and one uniform matroid of rank m. Requires a clean audit.
inline PartitionResult matroid_partition(const std::vector<QVector>& vectors, int d, int m,
                                         int exhaustive_limit = 20, bool allow_large = false) {
  SpanAuditReport audit = span_audit(vectors, d, m, exhaustive_limit, allow_large);
  if (!audit.clean) throw AuditViolationError(std::move(audit));
  const int k = static_cast<int>(vectors.size());
  const int uniform_class = d;  // class index d holds the remainder

  std::vector<int> cls(static_cast<size_t>(k), -1);
  auto members_of = [&](int c) {
    std::vector<int> ms;
    for (int i = 0; i < k; ++i)
      if (cls[static_cast<size_t>(i)] == c) ms.push_back(i);
    return ms;
  };
  auto fits = [&](int c, int x, int skip) {
    std::vector<int> ms = members_of(c);
    if (c == uniform_class) {
      long size = static_cast<long>(ms.size()) - (skip >= 0 ? 1 : 0);
      return size + 1 <= m;
    }
    RowBasis basis(vectors[0].dim());
    for (int y : ms)
      if (y != skip) basis.insert(vectors[static_cast<size_t>(y)]);
    return basis.insert(vectors[static_cast<size_t>(x)]);
  };

  for (int e = 0; e < k; ++e) {
    // BFS over elements; arc x -> y iff x can take y's slot in y's class.
    std::vector<int> parent(static_cast<size_t>(k), -2);
    std::queue<int> q;
    q.push(e);
    parent[static_cast<size_t>(e)] = -1;
    int terminal = -1, terminal_class = -1;
    while (!q.empty() && terminal < 0) {
      int x = q.front();
      q.pop();
      for (int c = 0; c <= d && terminal < 0; ++c) {
        if (c == cls[static_cast<size_t>(x)]) continue;
        if (fits(c, x, -1)) {
          terminal = x;
          terminal_class = c;
        }
      }
      if (terminal >= 0) break;
      for (int y = 0; y < k; ++y) {
        if (parent[static_cast<size_t>(y)] != -2 || cls[static_cast<size_t>(y)] < 0) continue;
        int cy = cls[static_cast<size_t>(y)];
        if (cy == cls[static_cast<size_t>(x)]) continue;
        if (fits(cy, x, y)) {
          parent[static_cast<size_t>(y)] = x;
          q.push(y);
        }
      }
    }
    if (terminal < 0) {
      // Cannot happen after a clean audit; surface the reachable set.
      std::string msg = "matroid_partition: augmentation failed for element " + std::to_string(e) +
                        " (violating set:";
      for (int i = 0; i < k; ++i)
        if (parent[static_cast<size_t>(i)] != -2) msg += " " + std::to_string(i);
      throw std::logic_error(msg + ") despite a clean audit");
    }
    // Rotate along the augmenting path: each element takes the slot vacated
    // by its successor.
    int x = terminal, into = terminal_class;
    while (x != -1) {
      std::swap(cls[static_cast<size_t>(x)], into);
      x = parent[static_cast<size_t>(x)];
    }
  }

  PartitionResult res;
  res.classes.resize(static_cast<size_t>(d));
  for (int i = 0; i < k; ++i) {
    int c = cls[static_cast<size_t>(i)];
    if (c < 0 || c > d) throw std::logic_error("matroid_partition: element left unassigned");
    if (c == uniform_class)
      res.remainder.push_back(i);
    else
      res.classes[static_cast<size_t>(c)].push_back(i);
  }
  // Exact re-verification of the partition.
  for (const auto& cl : res.classes) {
    RowBasis basis(vectors.empty() ? 1 : vectors[0].dim());
    for (int i : cl)
      if (!basis.insert(vectors[static_cast<size_t>(i)]))
        throw std::logic_error("matroid_partition: produced a dependent class");
  }
  if (static_cast<int>(res.remainder.size()) > m)
    throw std::logic_error("matroid_partition: remainder exceeds m");
  return res;
}

// ---------------------------------------------------------------------------
// odd-distance coloring (2^d bound)

struct OddDistanceColoring {
  std::vector<std::pair<int, int>> edges;  // pairs at odd integer distance
  std::vector<Rational> distances;         // parallel to edges
  std::vector<QVector> directions;         // distinct unit directions
  std::vector<int> edge_direction;         // parallel to edges
  PartitionResult partition;               // directions into d independent classes
  std::vector<int> colors;                 // per vertex, < 2^d
};

// Colors the odd-distance graph with at most 2^d colors: the unit directions
// are partitioned into d independent classes, and each class's subgraph is
// 2-colored (odd coefficient sums make an odd cycle impossible within an
// independent class).
inline OddDistanceColoring odd_distance_coloring(const PointSet& ps, const PolytopeNorm& norm,
                                                 int d) {
  if (ps.mode() != Mode::Exact)
    throw std::invalid_argument("odd_distance_coloring: exact mode required");
  if (ps.dim() != norm.dim()) throw std::invalid_argument("odd_distance_coloring: dimension mismatch");
  const auto& pts = ps.qpoints();
  const int n = ps.size();

  OddDistanceColoring out;
  std::map<QVector, int> dir_id;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      QVector diff = pts[static_cast<size_t>(x)] - pts[static_cast<size_t>(y)];
      Rational dist = norm.value_exact(diff);
      if (!dist.is_odd_integer()) continue;
      QVector u = (diff / dist).sign_canonical();
      auto [it, fresh] = dir_id.try_emplace(u, static_cast<int>(out.directions.size()));
      if (fresh) out.directions.push_back(u);
      out.edges.emplace_back(x, y);
      out.distances.push_back(dist);
      out.edge_direction.push_back(it->second);
    }
  }

  // Throws AuditViolationError when the typical-norm hypothesis fails.
  out.partition = matroid_partition(out.directions, d, 0);

  std::vector<int> class_of_dir(out.directions.size(), -1);
  for (size_t c = 0; c < out.partition.classes.size(); ++c)
    for (int i : out.partition.classes[c]) class_of_dir[static_cast<size_t>(i)] = static_cast<int>(c);

  out.colors.assign(static_cast<size_t>(n), 0);
  for (int c = 0; c < d; ++c) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (size_t id = 0; id < out.edges.size(); ++id) {
      if (class_of_dir[static_cast<size_t>(out.edge_direction[id])] != c) continue;
      adj[static_cast<size_t>(out.edges[id].first)].push_back(out.edges[id].second);
      adj[static_cast<size_t>(out.edges[id].second)].push_back(out.edges[id].first);
    }
    std::vector<int> bit(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
      if (bit[static_cast<size_t>(s)] != -1 || adj[static_cast<size_t>(s)].empty()) continue;
      bit[static_cast<size_t>(s)] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[static_cast<size_t>(x)]) {
          if (bit[static_cast<size_t>(y)] == -1) {
            bit[static_cast<size_t>(y)] = 1 - bit[static_cast<size_t>(x)];
            q.push(y);
          } else if (bit[static_cast<size_t>(y)] == bit[static_cast<size_t>(x)]) {
            throw std::logic_error("odd_distance_coloring: class subgraph is not bipartite");
          }
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (bit[static_cast<size_t>(v)] == 1) out.colors[static_cast<size_t>(v)] |= 1 << c;
  }

  for (size_t id = 0; id < out.edges.size(); ++id) {
    if (out.colors[static_cast<size_t>(out.edges[id].first)] ==
        out.colors[static_cast<size_t>(out.edges[id].second)])
      throw std::logic_error("odd_distance_coloring: adjacent vertices share a color");
  }
  return out;
}

}  // namespace normdist

#endif  // NORMDIST_DEPLAB_HPP
