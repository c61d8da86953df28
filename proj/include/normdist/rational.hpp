#ifndef NORMDIST_RATIONAL_HPP
#define NORMDIST_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace normdist {

// Exact rational scalar, always kept canonical: lowest terms, denominator > 0,
// zero stored as 0/1. All arithmetic stays exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) : v_(int64_str(n), 10) {}
  Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "p", "p/q" or "-p/q"; whitespace is not tolerated.
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(Raw{}, std::move(q));
  }

  // Exact value of the double (doubles are dyadic rationals); rejects NaN/inf.
  static Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational::from_double: non-finite");
    mpq_class q(x);
    return Rational(Raw{}, std::move(q));
  }

  // "p/q", with "/q" omitted when q == 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_odd_integer() const { return is_integer() && mpz_odd_p(v_.get_num().get_mpz_t()); }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(Raw{}, ::abs(v_)); }
  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational::reciprocal of zero");
    return Rational(Raw{}, 1 / v_);
  }

  Rational operator-() const { return Rational(Raw{}, -v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  struct Raw {};  // tag: value already canonical
  Rational(Raw, mpq_class v) : v_(std::move(v)) {}
  static std::string int64_str(long long n) { return std::to_string(n); }

  mpq_class v_;
};

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace normdist

template <>
struct std::hash<normdist::Rational> {
  size_t operator()(const normdist::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

#endif  // NORMDIST_RATIONAL_HPP
