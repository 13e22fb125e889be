#pragma once

#include "bdg/poly.hpp"
#include "bdg/rational.hpp"

#include <vector>

namespace bdg {

/// Exact coefficients of the bivariate Hermite polynomial
/// H_{2n}(x, y) = sum_{k=0..n} (-1)^k a[k] x^k y^{2n-2k} with
/// a[k] = 1 / (2^k k! (2n-2k)!). Immutable after construction.
struct HermiteCoeffs {
  int n;                    // half-degree: the statistic has degree 2n in y
  std::vector<Rational> a;  // n + 1 entries, each strictly positive
};

/// Largest n accepted; factorials stay cheap below this and nothing above it
/// is exercised by any check, so reject loudly instead of degrading.
inline constexpr int kMaxHermiteN = 64;

/// Throws std::invalid_argument unless 1 <= n <= kMaxHermiteN.
HermiteCoeffs hermite_coeffs(int n);

/// H_{2n}(x, y) in floating point: Horner in y^2 (innermost), x-powers
/// accumulated incrementally. Coefficients are converted to double here and
/// nowhere else.
double eval_bivariate(const HermiteCoeffs& h, double x, double y);

/// Same polynomial evaluated without rounding (test and certification
/// support).
Rational eval_bivariate_exact(const HermiteCoeffs& h, const Rational& x, const Rational& y);

/// The degree-2n polynomial in y obtained at x = 1; its real roots are the
/// Davis root set. Equals He_{2n}(y) / (2n)! in the classical probabilists'
/// normalization.
RationalPoly univariate_restriction(const HermiteCoeffs& h);

/// One sample of the martingale statistic rho_{2n} = H_{2n}(qv, si), where qv
/// samples the quadratic-variation integral and si the stochastic integral.
/// Negative qv is a contract violation (std::invalid_argument).
double rho_sample(const HermiteCoeffs& h, double qv, double si);

}  // namespace bdg
