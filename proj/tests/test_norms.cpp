#include <catch2/catch_amalgamated.hpp>

#include "normdist/norms.hpp"
#include "normdist/rng.hpp"

using namespace normdist;
using Catch::Approx;

namespace {

QVector qv(std::initializer_list<long> xs) {
  std::vector<Rational> e;
  for (long x : xs) e.emplace_back(x);
  return QVector(std::move(e));
}

// Random symmetric polygon norm: h random facet directions with offsets near 1.
PolytopeNorm random_polygon_norm(Rng& rng, int h = 5) {
  std::vector<Facet> fs;
  for (int i = 0; i < h; ++i) {
    QVector o(2);
    do {
      o[0] = rng.next_rational(6, 3);
      o[1] = rng.next_rational(6, 3);
    } while (o.is_zero());
    fs.push_back(Facet{o, Rational(static_cast<long>(rng.next_int(2, 5)), 3)});
  }
  // Guarantee boundedness regardless of the draws.
  fs.push_back(Facet{qv({1, 0}), Rational(2)});
  fs.push_back(Facet{qv({0, 1}), Rational(2)});
  return PolytopeNorm(2, fs);
}

}  // namespace

TEST_CASE("polytope norm exact evaluation") {
  PolytopeNorm sq = PolytopeNorm::cube(2);
  CHECK(sq.value_exact(qv({3, 4})) == Rational(4));
  CHECK(eval_norm(sq, qv({3, 4})) == Rational(4));
  CHECK(sq.value(Vec{3, 4}) == Approx(4.0));
  CHECK_THROWS(sq.value_exact(qv({1, 2, 3})));

  Norm euc = Norm::euclidean(2);
  CHECK(euc.value({3, 4}) == Approx(5.0));

  Norm str = Norm::strictified(PolytopeNorm::cube(2), 1.0 / 25.0);
  CHECK(str.value({3, 4}) == Approx(4.2));
}

TEST_CASE("polytope norm construction validates input") {
  CHECK_THROWS(PolytopeNorm(2, {Facet{qv({1, 0}), Rational(1)}}));  // unbounded slab
  CHECK_THROWS(PolytopeNorm(2, {Facet{qv({1, 0}), Rational(-1)}, Facet{qv({0, 1}), Rational(1)}}));
  CHECK_THROWS(PolytopeNorm(2, std::vector<Facet>{}));
}

TEST_CASE("boundary projection") {
  PolytopeNorm sq = PolytopeNorm::cube(2);
  CHECK(boundary_point(sq, qv({2, 1})) == QVector{Rational(1), Rational(1, 2)});

  Norm euc = Norm::euclidean(2);
  Vec b = boundary_point(euc, {3, 4});
  CHECK(b[0] == Approx(0.6));
  CHECK(b[1] == Approx(0.8));

  Norm str = Norm::strictified(PolytopeNorm::cube(2), 1.0 / 25.0);
  Vec bs = boundary_point(str, {3, 4});
  CHECK(str.value(bs) == Approx(1.0).margin(1e-12));
  CHECK(bs[0] == Approx(3.0 / 4.2));

  CHECK_THROWS(boundary_point(sq, qv({0, 0})));
}

TEST_CASE("epsilon net greedy behaviour") {
  std::vector<Vec> line = {{0.0}, {1.0}, {2.0}};
  auto net = epsilon_net(line, 1.0);
  REQUIRE(net.size() == 2);
  CHECK(net[0][0] == 0.0);
  CHECK(net[1][0] == 2.0);

  auto single = epsilon_net(line, 10.0);
  REQUIRE(single.size() == 1);
  CHECK(single[0][0] == 0.0);

  CHECK_THROWS(epsilon_net(line, 0.0));
}

TEST_CASE("epsilon net separation, covering and packing bound") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng.next_int(1, 60));
    double R = 2.0;
    std::vector<Vec> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({R * (2 * rng.next_double() - 1), R * (2 * rng.next_double() - 1)});
    double eps = 0.3 + rng.next_double();
    auto net = epsilon_net(pts, eps);
    for (size_t i = 0; i < net.size(); ++i)
      for (size_t j = i + 1; j < net.size(); ++j) CHECK(vdist(net[i], net[j]) > eps);
    for (const Vec& p : pts) {
      double best = 1e18;
      for (const Vec& q : net) best = std::min(best, vdist(p, q));
      CHECK(best <= eps);
    }
    double bound_R = R * std::sqrt(2.0);
    CHECK(static_cast<double>(net.size()) <= std::pow(2 * bound_R / eps + 1, 2));
  }
}

TEST_CASE("vertices of simple polytopes") {
  auto sq = PolytopeNorm::cube(2).vertices();
  REQUIRE(sq.size() == 4);
  CHECK(std::find(sq.begin(), sq.end(), qv({1, 1})) != sq.end());
  CHECK(std::find(sq.begin(), sq.end(), qv({-1, 1})) != sq.end());

  auto oct = PolytopeNorm::cross(3).vertices();
  REQUIRE(oct.size() == 6);  // cross-polytope has the +-e_i as vertices
  CHECK(std::find(oct.begin(), oct.end(), qv({0, 0, 1})) != oct.end());

  auto cube3 = PolytopeNorm::cube(3).vertices();
  REQUIRE(cube3.size() == 8);
}

TEST_CASE("strictify moves the boundary by at most mu") {
  PolytopeNorm sq = PolytopeNorm::cube(2);
  Norm s = strictify(sq, 0.1);
  REQUIRE(s.kind() == Norm::Kind::Strictified);
  CHECK(s.epsilon() == Approx(0.05));  // c = sqrt(2), eps = mu / c^2

  // Boundary point along e1 moves to 1/(1+eps).
  Vec b = boundary_point(s, {1, 0});
  CHECK(b[0] == Approx(1.0 / 1.05));

  double dh = hausdorff_distance(Norm::polytope(sq), s);
  CHECK(dh <= 0.1 + 1e-6);

  // B' stays inside B even for huge mu (additive perturbation only shrinks).
  Norm big = strictify(sq, 50.0);
  for (const Vec& p : sample_boundary(big, 64).points) {
    CHECK(sq.value(p) <= 1.0 + 1e-12);
  }
}

TEST_CASE("strictified norms satisfy a strict triangle inequality") {
  Norm s = Norm::strictified(PolytopeNorm::cube(2), 0.05);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    Vec x = {2 * rng.next_double() - 1, 2 * rng.next_double() - 1};
    Vec y = {2 * rng.next_double() - 1, 2 * rng.next_double() - 1};
    double cross = x[0] * y[1] - x[1] * y[0];
    if (std::abs(cross) < 1e-6) continue;  // skip (near-)parallel pairs
    CHECK(s.value(vadd(x, y)) < s.value(x) + s.value(y) - 1e-12);
  }
}

TEST_CASE("norm axioms on random samples") {
  Rng rng(17);
  PolytopeNorm p = random_polygon_norm(rng);
  // Exact homogeneity.
  for (int i = 0; i < 200; ++i) {
    QVector x(2);
    x[0] = rng.next_rational(9, 5);
    x[1] = rng.next_rational(9, 5);
    Rational a = rng.next_rational(9, 5);
    CHECK(p.value_exact(a * x) == a.abs() * p.value_exact(x));
  }
  // Triangle inequality, float sampling across norm kinds.
  std::vector<Norm> norms = {Norm::polytope(p), Norm::euclidean(2), Norm::lp(2, 3.0),
                             Norm::strictified(PolytopeNorm::cube(2), 0.03)};
  for (const Norm& n : norms) {
    for (int i = 0; i < 10000 / 4; ++i) {
      Vec x = {4 * rng.next_double() - 2, 4 * rng.next_double() - 2};
      Vec y = {4 * rng.next_double() - 2, 4 * rng.next_double() - 2};
      CHECK(n.value(vadd(x, y)) <= n.value(x) + n.value(y) + 1e-9);
    }
  }
}

TEST_CASE("hausdorff distance of polytope pairs") {
  PolytopeNorm sq = PolytopeNorm::cube(2);
  CHECK(hausdorff_distance(sq, sq) == Approx(0.0).margin(1e-12));

  double delta = 0.25;
  std::vector<Facet> grown;
  for (const Facet& f : sq.facets()) grown.push_back(Facet{f.normal, f.offset + Rational(1, 4)});
  PolytopeNorm sq2(2, grown);
  CHECK(hausdorff_distance(sq, sq2) == Approx(delta * std::sqrt(2.0)).epsilon(1e-9));

  CHECK_THROWS(hausdorff_distance(PolytopeNorm::cube(2), PolytopeNorm::cube(3)));
}

TEST_CASE("hausdorff distance square vs euclidean disc") {
  double dh = hausdorff_distance(Norm::polytope(PolytopeNorm::cube(2)), Norm::euclidean(2));
  CHECK(dh == Approx(std::sqrt(2.0) - 1.0).margin(1e-4));
}

TEST_CASE("hausdorff distance is symmetric and satisfies the triangle inequality") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    PolytopeNorm a = random_polygon_norm(rng);
    PolytopeNorm b = random_polygon_norm(rng);
    PolytopeNorm c = random_polygon_norm(rng);
    double ab = hausdorff_distance(a, b);
    double ba = hausdorff_distance(b, a);
    CHECK(ab == Approx(ba).margin(1e-10));
    double ac = hausdorff_distance(a, c);
    double cb = hausdorff_distance(c, b);
    CHECK(ab <= ac + cb + 1e-8);
  }
}

TEST_CASE("approximate polytope of the euclidean disc") {
  auto res = approximate_polytope_detailed(Norm::euclidean(2), 0.5, 2);
  REQUIRE(res.poly.has_value());
  CHECK(res.max_facet_diameter < 0.5);
  CHECK(res.hausdorff < 0.5);

  // Facet list closed under normal negation: automatic in |o.x| <= t form,
  // and the vertex set must be symmetric.
  auto vs = res.poly->vertices();
  for (const QVector& v : vs) {
    CHECK(std::find(vs.begin(), vs.end(), -v) != vs.end());
  }
}

TEST_CASE("approximate polytope of a strictified square") {
  Norm s = Norm::strictified(PolytopeNorm::cube(2), 0.01);
  auto res = approximate_polytope_detailed(s, 0.2, 2);
  REQUIRE(res.poly.has_value());
  CHECK(res.max_facet_diameter < 0.2);
  CHECK(res.hausdorff < 0.2);
  CHECK(hausdorff_distance(s, Norm::polytope(*res.poly)) < 0.2);
}

TEST_CASE("approximate polytope in 3d") {
  auto res = approximate_polytope_detailed(Norm::euclidean(3), 0.8, 3,
                                           ApproxConfig{.samples_3d = 2048});
  REQUIRE(res.poly.has_value());
  CHECK(res.max_facet_diameter < 0.8);
  CHECK(res.hausdorff < 0.8);
  CHECK_THROWS(approximate_polytope(Norm::polytope(PolytopeNorm::cube(2)), 0.5, 2));
  CHECK_THROWS(approximate_polytope(Norm::euclidean(2), 0.5, 4));
}

TEST_CASE("boundary witness basic cases") {
  PolytopeNorm sq = PolytopeNorm::cube(2);
  Vec x = {1.0, 0.25};
  Vec y = boundary_witness(sq, sq, x);
  CHECK(vdist(x, y) <= 1e-9);

  std::vector<Facet> grown;
  for (const Facet& f : sq.facets())
    grown.push_back(Facet{f.normal, f.offset * Rational(11, 10)});
  PolytopeNorm sq11(2, grown);
  Vec y2 = boundary_witness(sq, sq11, {1.0, 0.0});
  CHECK(vdist(Vec{1.0, 0.0}, y2) == Approx(0.1).margin(1e-9));
  CHECK(sq11.value(y2) == Approx(1.0).margin(1e-12));

  CHECK_THROWS(boundary_witness(sq, sq11, {5.0, 5.0}));
}

TEST_CASE("boundary witness residual bounded by hausdorff distance") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    PolytopeNorm p = random_polygon_norm(rng);
    PolytopeNorm q = random_polygon_norm(rng);
    double dh = hausdorff_distance(p, q);
    double a = 2 * 3.14159265358979 * rng.next_double();
    Vec x = boundary_point(Norm::polytope(p), {std::cos(a), std::sin(a)});
    Vec y = boundary_witness(p, q, x);
    CHECK(q.value(y) == Approx(1.0).margin(1e-9));
    CHECK(vdist(x, y) <= dh + 1e-9);
  }
}
