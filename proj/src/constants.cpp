#include "bdg/constants.hpp"

#include <stdexcept>

namespace bdg {

namespace {

double dyadic_power(const Dyadic& base, int exponent) {
  return base.to_rational().pow(static_cast<unsigned>(exponent)).to_double();
}

}  // namespace

std::pair<EvenClassPoly, OddClassPoly> even_inequality(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("even_inequality: n must be even and at least 2");
  HermiteCoeffs h = hermite_coeffs(n);

  EvenClassPoly p1;
  p1.b.assign(static_cast<std::size_t>(n / 2) + 1, Rational(0));
  p1.b.front() = h.a[static_cast<std::size_t>(n)];  // a_n at z^0
  p1.b.back() = h.a[0];                             // a_0 at z^n

  OddClassPoly p2;
  p2.c.assign(static_cast<std::size_t>(n / 2), Rational(0));
  for (int l = 0; 2 * l + 1 <= n; ++l) {
    int exponent = n - (2 * l + 1);  // odd since n is even
    p2.c[static_cast<std::size_t>((exponent - 1) / 2)] = h.a[static_cast<std::size_t>(2 * l + 1)];
  }
  return {std::move(p1), std::move(p2)};
}

OddUpperInequality odd_upper_inequality(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd_upper_inequality: n must be odd and at least 3");
  HermiteCoeffs h = hermite_coeffs(n);

  OddUpperInequality out;
  out.a0 = h.a[0];
  out.m = (n - 1) / 2;
  std::vector<Rational> rhs(static_cast<std::size_t>(n), Rational(0));
  for (int l = 0; 2 * l + 1 <= n; ++l) {
    int exponent = n - (2 * l + 1);  // even since n is odd; includes the constant a_n
    rhs[static_cast<std::size_t>(exponent)] = h.a[static_cast<std::size_t>(2 * l + 1)];
  }
  out.rhs = RationalPoly(std::move(rhs));
  return out;
}

std::pair<RationalPoly, Rational> odd_lower_inequality(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd_lower_inequality: n must be odd and at least 3");
  HermiteCoeffs h = hermite_coeffs(n);

  std::vector<Rational> p(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; 2 * k < n; ++k)
    p[static_cast<std::size_t>(n - 2 * k)] = h.a[static_cast<std::size_t>(2 * k)];
  return {RationalPoly(std::move(p)), h.a[static_cast<std::size_t>(n)]};
}

std::pair<CertifiedInterval, CertifiedInterval> davis_root_enclosures(int n, double tol) {
  return smallest_and_largest_positive_roots(univariate_restriction(hermite_coeffs(n)), tol);
}

std::pair<double, double> sharp_constants(int n, double tol) {
  auto [lo_iv, hi_iv] = davis_root_enclosures(n, tol);
  return {dyadic_power(lo_iv.lo, 2 * n), dyadic_power(hi_iv.hi, 2 * n)};
}

BoundsResult proved_constants(int n, double tol) {
  if (n < 2) throw std::invalid_argument("proved_constants: n must be at least 2");

  BoundsResult r;
  r.n = n;
  r.even = n % 2 == 0;
  r.tol = tol;

  if (r.even) {
    auto [p1, p2] = even_inequality(n);
    CertifiedInterval iv = lemma2_interval(p1, p2, tol);
    if (!iv.nonempty())
      throw std::logic_error("proved_constants: even-n solution set is empty, which contradicts "
                             "the martingale identity");
    r.d1 = iv.lo.to_double();
    r.d2 = iv.hi.to_double();
    r.c1_proved = dyadic_power(iv.lo, n);
    r.c2_proved = dyadic_power(iv.hi, n);
  } else {
    OddUpperInequality up = odd_upper_inequality(n);
    CertifiedInterval upper = lemma3_bound(up.a0, up.m, up.rhs, tol);
    r.d2 = upper.hi.to_double();
    r.c2_proved = dyadic_power(upper.hi, n);

    // P(z) - a_n has exactly one real root and it is positive: P has all
    // positive coefficients on odd powers, so it is odd and increasing.
    auto [p, threshold] = odd_lower_inequality(n);
    RationalPoly shifted = p - RationalPoly::constant(threshold);
    auto [smallest, largest] = smallest_and_largest_positive_roots(shifted, tol);
    if (largest.certificate.below != 0 || smallest.certificate.above != 0)
      throw std::logic_error("proved_constants: odd lower-bound root is not unique");
    r.d1 = smallest.lo.to_double();
    r.c1_proved = dyadic_power(smallest.lo, n);
  }

  auto [lo_iv, hi_iv] = davis_root_enclosures(n, tol);
  r.c1_sharp = dyadic_power(lo_iv.lo, 2 * n);
  r.c2_sharp = dyadic_power(hi_iv.hi, 2 * n);
  return r;
}

}  // namespace bdg
