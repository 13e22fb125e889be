#pragma once

#include "bdg/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bdg {

/// Univariate polynomial with exact rational coefficients, ascending degree
/// order. The zero polynomial is canonically the empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly zero() { return RationalPoly(); }
  static RationalPoly constant(Rational a) { return RationalPoly({std::move(a)}); }
  /// a * z^k
  static RationalPoly monomial(Rational a, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of z^k (zero beyond the stored degree).
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  double eval_double(double x) const;

  RationalPoly derivative() const;

  RationalPoly operator-() const;
  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly scaled(const Rational& s) const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  /// Monic gcd (1 for coprime inputs).
  static RationalPoly gcd(RationalPoly a, RationalPoly b);

  /// p / gcd(p, p'): same distinct roots, all simple.
  RationalPoly squarefree_part() const;
  bool is_squarefree() const;

  /// Positive-rational multiple with coprime integer coefficients. Scaling by
  /// a positive constant preserves roots and every sign computed from it.
  RationalPoly primitive_integer_form() const;

  /// Smallest power of two B with all real roots in (-B, B) (Cauchy bound).
  mpz_class cauchy_root_bound_pow2() const;

  /// Human-readable, e.g. "1/24 z^4 - 1/4 z^2 + 1/8".
  std::string str(const std::string& var = "z") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace bdg
