#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bdg {

/// Exact rational number. Always in lowest terms with positive denominator;
/// arithmetic never rounds. Backed by GMP, which canonicalizes the results of
/// all arithmetic operations.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double x);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
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

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational pow(unsigned e) const;

  /// The one sanctioned exit to floating point (single rounding).
  double to_double() const { return v_.get_d(); }

  /// "p" or "p/q" in lowest terms.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

inline Rational Rational::from_double(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);  // exact: binary doubles are dyadic
  return Rational(q);
}

inline Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

inline Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(r);  // lowest terms in == lowest terms out, canonicalize is a no-op
}

/// n! as an exact integer.
inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// (2n-1)!! = 1·3·5···(2n-1), the 2n-th standard Gaussian moment.
inline mpz_class double_factorial_odd(unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

}  // namespace bdg
