#include <catch2/catch_amalgamated.hpp>

#include "normdist/qlinalg.hpp"
#include "normdist/rng.hpp"

using namespace normdist;

namespace {

QVector qv(std::initializer_list<long> xs) {
  std::vector<Rational> e;
  for (long x : xs) e.emplace_back(x);
  return QVector(std::move(e));
}

QMatrix random_matrix(Rng& rng, int rows, int cols) {
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.next_rational(5, 3);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("5/2") == Rational(5, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational(1, 0));

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(7).is_odd_integer());
  CHECK_FALSE(Rational(4).is_odd_integer());
  CHECK_FALSE(Rational(7, 2).is_odd_integer());
  CHECK(Rational::from_double(0.25) == Rational(1, 4));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(QMatrix::identity(2)) == 2);

  QMatrix dep = QMatrix::from_rows({qv({1, 0}), qv({2, 0})});
  CHECK(rank(dep) == 1);

  QMatrix m = QMatrix::from_rows({qv({1, 2, 3}), qv({4, 5, 6}), qv({7, 8, 9})});
  CHECK(rank(m) == 2);
}

TEST_CASE("span membership") {
  CHECK(span_membership(qv({1, 1}), {qv({1, 0}), qv({0, 1})}));
  CHECK_FALSE(span_membership(qv({1, 1}), {qv({1, 0})}));
  CHECK(span_membership(qv({2, 4, 6}), {qv({1, 2, 3})}));
  CHECK_THROWS(span_membership(qv({1, 1, 1}), {qv({1, 0})}));
}

TEST_CASE("nullspace basis") {
  CHECK(nullspace(QMatrix::identity(2)).empty());

  QMatrix ones(1, 2);
  ones.at(0, 0) = Rational(1);
  ones.at(0, 1) = Rational(1);
  auto ns = nullspace(ones);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].line_canonical() == qv({1, -1}).line_canonical());

  // Transpose system used for hyperplane extraction: columns (1,0),(0,2),(3,3).
  QMatrix t = QMatrix::from_rows({qv({1, 0, 3}), qv({0, 2, 3})});
  auto cs = nullspace(t);
  REQUIRE(cs.size() == 1);
  QVector expected{Rational(3), Rational(3, 2), Rational(-1)};
  CHECK(cs[0].line_canonical() == expected.line_canonical());
}

TEST_CASE("rank equals rank of transpose") {
  Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = static_cast<int>(rng.next_int(1, 5));
    int cols = static_cast<int>(rng.next_int(1, 5));
    QMatrix m = random_matrix(rng, rows, cols);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("span membership matches rank criterion") {
  Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = static_cast<int>(rng.next_int(2, 4));
    int nb = static_cast<int>(rng.next_int(1, 4));
    std::vector<QVector> basis;
    for (int i = 0; i < nb; ++i) {
      QVector v(dim);
      for (int j = 0; j < dim; ++j) v[j] = rng.next_rational(4, 2);
      basis.push_back(v);
    }
    QVector v(dim);
    for (int j = 0; j < dim; ++j) v[j] = rng.next_rational(4, 2);

    int rank_without = rank(basis);
    auto with = basis;
    with.push_back(v);
    CHECK(span_membership(v, basis) == (rank(with) == rank_without));
  }
}

TEST_CASE("nullspace vectors annihilate the matrix exactly") {
  Rng rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = static_cast<int>(rng.next_int(1, 4));
    int cols = static_cast<int>(rng.next_int(1, 5));
    QMatrix m = random_matrix(rng, rows, cols);
    auto ns = nullspace(m);
    CHECK(static_cast<int>(ns.size()) == m.cols() - rank(m));
    for (const QVector& w : ns) {
      CHECK((m * w).is_zero());
    }
  }
}

TEST_CASE("rank is invariant under row permutation") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m = random_matrix(rng, 4, 3);
    std::vector<QVector> rows;
    for (int r = 0; r < 4; ++r) rows.push_back(m.row(r));
    int base = rank(m);
    std::reverse(rows.begin(), rows.end());
    CHECK(rank(QMatrix::from_rows(rows)) == base);
  }
}

TEST_CASE("solve returns exact solutions") {
  QMatrix a = QMatrix::from_rows({qv({1, 2}), qv({3, 4})});
  QVector b{Rational(5), Rational(11)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((a * *x) == b);

  QMatrix sing = QMatrix::from_rows({qv({1, 1}), qv({1, 1})});
  CHECK_FALSE(solve(sing, QVector{Rational(0), Rational(1)}).has_value());
}

TEST_CASE("row basis incremental span") {
  RowBasis rb(3);
  CHECK(rb.insert(qv({1, 2, 3})));
  CHECK_FALSE(rb.insert(qv({2, 4, 6})));
  CHECK(rb.insert(qv({0, 1, 0})));
  CHECK(rb.rank() == 2);
  CHECK(rb.contains(qv({1, 3, 3})));
  CHECK_FALSE(rb.contains(qv({0, 0, 1})));
}
