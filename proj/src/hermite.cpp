#include "bdg/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bdg {

HermiteCoeffs hermite_coeffs(int n) {
  if (n < 1 || n > kMaxHermiteN)
    throw std::invalid_argument("hermite_coeffs: n must be in [1, " +
                                std::to_string(kMaxHermiteN) + "], got " + std::to_string(n));
  HermiteCoeffs h;
  h.n = n;
  h.a.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    mpz_class den = (mpz_class(1) << k) * factorial(static_cast<unsigned>(k)) *
                    factorial(static_cast<unsigned>(2 * n - 2 * k));
    h.a.emplace_back(mpz_class(1), den);
  }
  return h;
}

double eval_bivariate(const HermiteCoeffs& h, double x, double y) {
  const double u = y * y;
  double acc = h.a[0].to_double();
  double xpow = 1.0;
  for (int k = 1; k <= h.n; ++k) {
    xpow *= x;
    double term = h.a[static_cast<std::size_t>(k)].to_double() * xpow;
    acc = acc * u + (k % 2 == 0 ? term : -term);
  }
  return acc;
}

Rational eval_bivariate_exact(const HermiteCoeffs& h, const Rational& x, const Rational& y) {
  const Rational u = y * y;
  Rational acc = h.a[0];
  Rational xpow(1);
  for (int k = 1; k <= h.n; ++k) {
    xpow *= x;
    Rational term = h.a[static_cast<std::size_t>(k)] * xpow;
    acc = acc * u + (k % 2 == 0 ? term : -term);
  }
  return acc;
}

RationalPoly univariate_restriction(const HermiteCoeffs& h) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * h.n) + 1, Rational(0));
  for (int k = 0; k <= h.n; ++k) {
    Rational c = h.a[static_cast<std::size_t>(k)];
    coeffs[static_cast<std::size_t>(2 * h.n - 2 * k)] = k % 2 == 0 ? c : -c;
  }
  return RationalPoly(std::move(coeffs));
}

double rho_sample(const HermiteCoeffs& h, double qv, double si) {
  if (!(qv >= 0.0))
    throw std::invalid_argument("rho_sample: quadratic-variation sample must be nonnegative");
  return eval_bivariate(h, qv, si);
}

}  // namespace bdg
