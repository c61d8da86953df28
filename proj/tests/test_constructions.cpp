#include <catch2/catch_amalgamated.hpp>

#include "normdist/constructions.hpp"
#include "testutil.hpp"

using namespace normdist;
using namespace normdist::testutil;
using Catch::Approx;

namespace {

long count_unit_edges(const ConstructionResult& res, const Norm& n) {
  return build_udg(res.points, n).edge_count();
}

}  // namespace

TEST_CASE("hypercube embedding, small k") {
  Rng rng(3);
  PolytopeNorm poly = random_polytope_norm(rng, 2, 3);
  Norm n = Norm::polytope(poly);

  ConstructionResult r1 = hypercube_embedding(n, 1, 0);
  CHECK(r1.points.size() == 2);
  CHECK(r1.promised_edges == 1);
  CHECK(count_unit_edges(r1, n) >= 1);

  ConstructionResult r3 = hypercube_embedding(n, 3, 0);
  CHECK(r3.points.size() == 8);
  CHECK(r3.promised_edges == 12);
  CHECK(count_unit_edges(r3, n) >= 12);
}

TEST_CASE("hypercube embedding at k = 10 counted exactly") {
  Rng rng(8);
  PolytopeNorm poly = random_polytope_norm(rng, 2, 3);
  Norm n = Norm::polytope(poly);
  ConstructionResult res = hypercube_embedding(n, 10, 7);
  CHECK(res.points.size() == 1024);
  CHECK(res.promised_edges == 5120);
  CHECK(count_unit_edges(res, n) >= 5120);
}

TEST_CASE("hypercube embedding is deterministic per seed") {
  Norm n = Norm::euclidean(2);
  ConstructionResult a = hypercube_embedding(n, 4, 99);
  ConstructionResult b = hypercube_embedding(n, 4, 99);
  CHECK(a.points.fpoints() == b.points.fpoints());
  ConstructionResult c = hypercube_embedding(n, 4, 100);
  CHECK(a.points.fpoints() != c.points.fpoints());
}

TEST_CASE("unit circle partner") {
  SECTION("euclidean gives the equilateral point") {
    Vec y = unit_circle_partner(Norm::euclidean(2), {1, 0});
    CHECK(y[0] == Approx(0.5).margin(1e-9));
    CHECK(std::abs(y[1]) == Approx(std::sqrt(3) / 2).margin(1e-9));
  }
  SECTION("lp and strictified residuals") {
    for (const Norm& n : {Norm::lp(2, 3.0), Norm::strictified(PolytopeNorm::cube(2), 0.05)}) {
      Vec x = boundary_point(n, {0.3, 1.0});
      Vec y = unit_circle_partner(n, x);
      CHECK(std::abs(n.value(y) - 1.0) < 1e-9);
      CHECK(std::abs(n.value(vsub(y, x)) - 1.0) < 1e-9);
    }
  }
  SECTION("rejects polytope norms") {
    CHECK_THROWS(unit_circle_partner(Norm::polytope(PolytopeNorm::cube(2)), {1, 0}));
  }
}

TEST_CASE("triangle power") {
  Norm euc = Norm::euclidean(2);
  ConstructionResult r1 = triangle_power(euc, 1, 0);
  CHECK(r1.points.size() == 3);
  CHECK(r1.promised_edges == 3);
  CHECK(count_unit_edges(r1, euc) >= 3);

  ConstructionResult r2 = triangle_power(euc, 2, 5);
  CHECK(r2.points.size() == 9);
  CHECK(r2.promised_edges == 18);
  CHECK(count_unit_edges(r2, euc) >= 18);

  ConstructionResult r5 = triangle_power(euc, 5, 1);
  CHECK(r5.points.size() == 243);
  CHECK(r5.promised_edges == 1215);
  CHECK(count_unit_edges(r5, euc) >= 1215);
}

TEST_CASE("triangle power under a strictified norm") {
  Norm s = Norm::strictified(PolytopeNorm::cube(2), 0.05);
  ConstructionResult r3 = triangle_power(s, 3, 4);
  CHECK(r3.points.size() == 27);
  CHECK(count_unit_edges(r3, s) >= r3.promised_edges);
}

TEST_CASE("base-3 composition") {
  Norm euc = Norm::euclidean(2);

  ConstructionResult r3 = compose_base3(euc, 3, 0);
  CHECK(r3.points.size() == 3);
  CHECK(r3.promised_edges == 3);
  CHECK(count_unit_edges(r3, euc) >= 3);

  ConstructionResult r10 = compose_base3(euc, 10, 0);
  CHECK(r10.points.size() == 10);
  CHECK(r10.promised_edges == 18);  // digits (101)_3: one 9-block + isolated point
  CHECK(count_unit_edges(r10, euc) >= 18);

  ConstructionResult r27 = compose_base3(euc, 27, 0);
  CHECK(r27.points.size() == 27);
  CHECK(r27.promised_edges == 81);
  CHECK(count_unit_edges(r27, euc) >= 81);
}

TEST_CASE("sphere intersection samples") {
  Vec c1 = {0, 0, 0}, c2 = {1, 0, 0};
  auto pts = sphere_intersection_samples(c1, c2, 64, 12);
  REQUIRE(pts.size() == 64);
  for (const Vec& z : pts) {
    CHECK(std::abs(vdist(z, c1) - 1.0) < 1e-12);
    CHECK(std::abs(vdist(z, c2) - 1.0) < 1e-12);
    CHECK(z[0] == Approx(0.5).margin(1e-12));  // plane x = 1/2
    CHECK(std::hypot(z[1], z[2]) == Approx(std::sqrt(3) / 2).margin(1e-12));
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) CHECK(vdist(pts[i], pts[j]) > 0);

  CHECK_THROWS(sphere_intersection_samples(c1, {2, 0, 0}, 4, 0));
  CHECK_THROWS(sphere_intersection_samples(c1, c1, 4, 0));
}

TEST_CASE("bipartite construction in the plane") {
  Rng rng(21);
  PolytopeNorm poly = random_polytope_norm(rng, 2, 3);
  Norm n = Norm::polytope(poly);

  ConstructionResult r22 = bipartite_construction(n, 2, 2, 2, 1);
  CHECK(r22.points.size() == 8);
  CHECK(r22.promised_edges == 4);
  CHECK(count_unit_edges(r22, n) >= 4);
  CHECK(r22.points.mode() == Mode::Exact);

  ConstructionResult r21 = bipartite_construction(n, 2, 2, 1, 1);
  CHECK(r21.points.size() == 4);
  CHECK(r21.promised_edges == 1);
  CHECK(count_unit_edges(r21, n) >= 1);
}

TEST_CASE("bipartite construction in R^3") {
  Norm euc = Norm::euclidean(3);
  ConstructionResult res = bipartite_construction(euc, 3, 2, 3, 2);
  CHECK(res.points.size() == 32);  // k^2 * 2^m = 4 * 8
  CHECK(res.promised_edges == 48); // (d-1) m (k-1) k^{d-2} 2^{m-1} = 2*3*1*2*4
  CHECK(count_unit_edges(res, euc) >= 48);

  CHECK_THROWS(bipartite_construction(Norm::lp(3, 3.0), 3, 2, 2, 0));
  CHECK_THROWS(bipartite_construction(euc, 3, 1, 2, 0));
}

TEST_CASE("construction factors describe the point set") {
  Rng rng(2);
  PolytopeNorm poly = random_polytope_norm(rng, 2, 3);
  Norm n = Norm::polytope(poly);
  ConstructionResult res = bipartite_construction(n, 2, 3, 2, 9);
  // |points| equals the product of the factor sizes.
  size_t prod = 1;
  for (const MinkowskiFactor& f : res.factors) prod *= f.summands.size();
  CHECK(prod == static_cast<size_t>(res.points.size()));
}
