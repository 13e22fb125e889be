#include "bdg/lemmas.hpp"

#include <stdexcept>

namespace bdg {

void validate(const EvenClassPoly& p1) {
  if (p1.b.size() < 2)
    throw std::invalid_argument("EvenClassPoly: need at least the z^0 and one even power term");
  for (const auto& bk : p1.b)
    if (bk.sign() < 0) throw std::invalid_argument("EvenClassPoly: coefficients must be nonnegative");
  if (p1.b.front().sign() <= 0) throw std::invalid_argument("EvenClassPoly: b[0] must be positive");
  if (p1.b.back().sign() <= 0)
    throw std::invalid_argument("EvenClassPoly: leading coefficient must be positive");
}

void validate(const OddClassPoly& p2) {
  for (const auto& ci : p2.c)
    if (ci.sign() < 0) throw std::invalid_argument("OddClassPoly: coefficients must be nonnegative");
}

RationalPoly to_poly(const EvenClassPoly& p1) {
  std::vector<Rational> coeffs(2 * p1.b.size() - 1, Rational(0));
  for (std::size_t k = 0; k < p1.b.size(); ++k) coeffs[2 * k] = p1.b[k];
  return RationalPoly(std::move(coeffs));
}

RationalPoly to_poly(const OddClassPoly& p2) {
  if (p2.c.empty()) return RationalPoly::zero();
  std::vector<Rational> coeffs(2 * p2.c.size(), Rational(0));
  for (std::size_t i = 0; i < p2.c.size(); ++i) coeffs[2 * i + 1] = p2.c[i];
  return RationalPoly(std::move(coeffs));
}

CertifiedInterval lemma2_interval(const EvenClassPoly& p1, const OddClassPoly& p2, double tol) {
  validate(p1);
  validate(p2);
  RationalPoly lhs = to_poly(p1);
  RationalPoly rhs = to_poly(p2);
  if (!(rhs.degree() < lhs.degree()))
    throw std::invalid_argument("lemma2_interval: deg P2 must be below deg P1 (m1 < m)");

  // D(0) = -b[0] < 0 and D < 0 on the negative axis, so every real root of D
  // is positive and S = { D >= 0 } is nonempty iff D has a real root.
  RationalPoly d = rhs - lhs;
  mpz_class bound = d.primitive_integer_form().cauchy_root_bound_pow2();
  long total = count_roots_in(d, Rational(mpz_class(-bound)), Rational(bound));
  if (total == 0) {
    CertifiedInterval empty;
    empty.status = CertifiedInterval::Status::empty;
    return empty;
  }
  long nonpositive = count_roots_in(d, Rational(mpz_class(-bound)), Rational(0));
  if (nonpositive != 0)
    throw std::logic_error("lemma2_interval: nonpositive root of P2 - P1 despite class invariants");

  auto [smallest, largest] = smallest_and_largest_positive_roots(d, tol);
  CertifiedInterval iv;
  iv.status = CertifiedInterval::Status::nonempty;
  iv.lo = smallest.lo;
  iv.hi = largest.hi;
  iv.certificate.below = smallest.certificate.below;
  iv.certificate.above = largest.certificate.above;
  iv.certificate.inside = total - iv.certificate.below - iv.certificate.above;
  if (iv.certificate.below != 0 || iv.certificate.above != 0 || iv.certificate.inside != total)
    throw std::logic_error("lemma2_interval: root containment certificate failed");
  return iv;
}

CertifiedInterval lemma3_bound(const Rational& b0, int m, const RationalPoly& rhs, double tol) {
  if (b0.sign() <= 0) throw std::invalid_argument("lemma3_bound: b0 must be positive");
  if (m < 1) throw std::invalid_argument("lemma3_bound: m must be a positive integer");
  if (rhs.is_zero()) throw std::invalid_argument("lemma3_bound: right side must be nonzero");
  for (const auto& c : rhs.coeffs())
    if (c.sign() < 0)
      throw std::invalid_argument("lemma3_bound: right side coefficients must be nonnegative");
  long lhs_degree = 2 * static_cast<long>(m) + 1;
  if (!(rhs.degree() < lhs_degree))
    throw std::invalid_argument("lemma3_bound: deg rhs must be below 2m+1 (m1 < m)");

  // D < 0 just right of zero (rhs dominates there) and D -> +inf, so the
  // largest real root exists and is positive.
  RationalPoly d = RationalPoly::monomial(b0, static_cast<std::size_t>(lhs_degree)) - rhs;
  auto [smallest, largest] = smallest_and_largest_positive_roots(d, tol);
  (void)smallest;
  if (largest.certificate.above != 0)
    throw std::logic_error("lemma3_bound: tail certificate failed");
  return largest;
}

CertifiedInterval lemma3_bound(const Rational& b0, int m, const OddClassPoly& p2, double tol) {
  validate(p2);
  if (p2.c.empty() || p2.c.front().sign() <= 0)
    throw std::invalid_argument("lemma3_bound: c[0] must be positive");
  if (p2.c.back().sign() <= 0)
    throw std::invalid_argument("lemma3_bound: top coefficient must be positive");
  if (!(static_cast<long>(p2.c.size()) - 1 < static_cast<long>(m)))
    throw std::invalid_argument("lemma3_bound: top index must be below m (m1 < m)");
  return lemma3_bound(b0, m, to_poly(p2), tol);
}

}  // namespace bdg
