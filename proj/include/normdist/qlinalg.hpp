#ifndef NORMDIST_QLINALG_HPP
#define NORMDIST_QLINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normdist/rational.hpp"

namespace normdist {

// Dense vector over the rationals.
class QVector {
 public:
  QVector() = default;
  explicit QVector(int dim) : e_(static_cast<size_t>(check_dim(dim))) {}
  explicit QVector(std::vector<Rational> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("QVector: dim must be >= 1");
  }
  QVector(std::initializer_list<Rational> entries) : e_(entries) {
    if (e_.empty()) throw std::invalid_argument("QVector: dim must be >= 1");
  }

  int dim() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return r.is_zero(); });
  }

  friend QVector operator+(const QVector& a, const QVector& b) {
    check_same_dim(a, b);
    QVector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend QVector operator-(const QVector& a, const QVector& b) {
    check_same_dim(a, b);
    QVector r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  QVector operator-() const {
    QVector r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = -e_[static_cast<size_t>(i)];
    return r;
  }
  friend QVector operator*(const Rational& c, const QVector& v) {
    QVector r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = c * v[i];
    return r;
  }
  friend QVector operator/(const QVector& v, const Rational& c) { return c.reciprocal() * v; }

  friend Rational dot(const QVector& a, const QVector& b) {
    check_same_dim(a, b);
    Rational s;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
  }

  friend bool operator==(const QVector& a, const QVector& b) { return a.e_ == b.e_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
  // Lexicographic; used for deterministic sorting and dedup.
  friend bool operator<(const QVector& a, const QVector& b) {
    check_same_dim(a, b);
    for (int i = 0; i < a.dim(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }

  // Sign convention: first nonzero coordinate positive. Zero vector unchanged.
  QVector sign_canonical() const {
    for (const Rational& r : e_) {
      if (!r.is_zero()) return r.sign() > 0 ? *this : -*this;
    }
    return *this;
  }

  // Canonical representative of the line spanned by this vector: first
  // nonzero coordinate scaled to 1. Requires a nonzero vector.
  QVector line_canonical() const {
    for (const Rational& r : e_) {
      if (!r.is_zero()) return *this / r;
    }
    throw std::domain_error("QVector::line_canonical: zero vector");
  }

  std::vector<double> to_doubles() const {
    std::vector<double> d(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) d[i] = e_[i].to_double();
    return d;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += e_[static_cast<size_t>(i)].str();
    }
    return s + ")";
  }

 private:
  static int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("QVector: dim must be >= 1");
    return dim;
  }
  static void check_same_dim(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("QVector: dimension mismatch");
  }

  std::vector<Rational> e_;
};

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("QMatrix: rows and cols must be >= 1");
  }

  static QMatrix from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("QMatrix::from_rows: no rows");
    QMatrix m(static_cast<int>(rows.size()), rows[0].dim());
    for (int r = 0; r < m.rows_; ++r) {
      if (rows[static_cast<size_t>(r)].dim() != m.cols_)
        throw std::invalid_argument("QMatrix::from_rows: ragged rows");
      for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][c];
    }
    return m;
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
  const Rational& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }

  QVector row(int r) const {
    QVector v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
  }
  QVector col(int c) const {
    QVector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend QVector operator*(const QMatrix& m, const QVector& v) {
    if (v.dim() != m.cols_) throw std::invalid_argument("QMatrix*QVector: dimension mismatch");
    QVector r(m.rows_);
    for (int i = 0; i < m.rows_; ++i) {
      Rational s;
      for (int c = 0; c < m.cols_; ++c) s += m.at(i, c) * v[c];
      r[i] = s;
    }
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

// Gauss-Jordan to reduced row echelon form. Pivot rule: scan columns left to
// right, take the first row (top to bottom) with a nonzero entry. Returns the
// pivot columns in order.
inline std::vector<int> rref_inplace(QMatrix& m) {
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int sel = -1;
    for (int r = pr; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
    }
    Rational inv = m.at(pr, c).reciprocal();
    for (int j = c; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, c).is_zero()) continue;
      Rational f = m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

inline int rank(const QMatrix& m) {
  QMatrix w = m;
  return static_cast<int>(rref_inplace(w).size());
}

inline int rank(const std::vector<QVector>& rows) {
  if (rows.empty()) return 0;
  return rank(QMatrix::from_rows(rows));
}

// Basis of the right nullspace {w : M w = 0}. Empty iff M has full column
// rank. Basis vectors follow the standard free-column convention: entry 1 at
// the free column, zeros at the other free columns.
inline std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix w = m;
  std::vector<int> pivots = rref_inplace(w);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    QVector v(m.cols());
    v[f] = Rational(1);
    for (size_t p = 0; p < pivots.size(); ++p) {
      v[pivots[p]] = -w.at(static_cast<int>(p), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.dim() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  std::vector<int> pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // row [0 .. 0 | 1]
  QVector x(a.cols());
  for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(static_cast<int>(p), a.cols());
  return x;
}

// Incremental row-space basis in echelon form; supports exact span queries
// and insertions. Rows are kept with pivot entry 1, sorted by pivot column.
class RowBasis {
 public:
  explicit RowBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  bool contains(const QVector& v) const { return reduce(v).is_zero(); }

  // Inserts v if independent of the current rows; returns whether inserted.
  bool insert(const QVector& v) {
    QVector r = reduce(v);
    int p = -1;
    for (int i = 0; i < dim_; ++i) {
      if (!r[i].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return false;
    r = r / r[p];
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const auto& row, int col) { return row.first < col; });
    rows_.insert(it, {p, std::move(r)});
    return true;
  }

 private:
  QVector reduce(QVector v) const {
    if (v.dim() != dim_) throw std::invalid_argument("RowBasis: dimension mismatch");
    for (const auto& [p, row] : rows_) {
      if (!v[p].is_zero()) {
        Rational f = v[p];
        for (int i = 0; i < dim_; ++i) v[i] -= f * row[i];
      }
    }
    return v;
  }

  int dim_;
  std::vector<std::pair<int, QVector>> rows_;
};

// True iff v lies in the Q-span of the given vectors.
inline bool span_membership(const QVector& v, const std::vector<QVector>& basis) {
  RowBasis b(v.dim());
  for (const QVector& u : basis) b.insert(u);
  return b.contains(v);
}

}  // namespace normdist

#endif  // NORMDIST_QLINALG_HPP
