#pragma once

#include "bdg/hermite.hpp"
#include "bdg/lemmas.hpp"
#include "bdg/sturm.hpp"

#include <utility>

namespace bdg {

/// Per-n record of the proved moment-bound constants and the sharp Davis
/// constants. Powers are taken exactly on the certified dyadic endpoints and
/// rounded once at the end, always outward: d1 (and the smallest Davis root)
/// use lower endpoints, d2 (and the largest Davis root) upper endpoints.
struct BoundsResult {
  int n = 0;
  bool even = false;
  double d1 = 0.0;  // lower interval endpoint (even case; odd lower-bound root)
  double d2 = 0.0;  // upper interval endpoint
  double c1_proved = 0.0;  // d1^n
  double c2_proved = 0.0;  // d2^n
  double c1_sharp = 0.0;   // l^{2n}, l = smallest positive Davis root
  double c2_sharp = 0.0;   // r^{2n}, r = largest positive Davis root
  double tol = 0.0;
};

/// Eq.-style inequality for even n >= 2: left side a0 z^n + a_n as an
/// even-class polynomial, right side sum of a_{2l+1} z^{n-(2l+1)} as an
/// odd-class polynomial. Throws on odd n.
std::pair<EvenClassPoly, OddClassPoly> even_inequality(int n);

/// Inequality for odd n >= 3: a0 z^n on the left (b0 = a0, n = 2m+1), and the
/// even-exponent sum of a_{2l+1} z^{n-(2l+1)} (constant term included) on the
/// right, in the generalized form the lemma-3 solver accepts.
struct OddUpperInequality {
  Rational a0;
  int m = 0;  // lhs = a0 z^{2m+1}
  RationalPoly rhs;
};
OddUpperInequality odd_upper_inequality(int n);

/// Lower-bound inequality for odd n >= 3: P(z) = sum over even 2k < n of
/// a_{2k} z^{n-2k} (all odd powers, all positive coefficients) against the
/// threshold a_n.
std::pair<RationalPoly, Rational> odd_lower_inequality(int n);

/// Certified enclosures of the smallest and largest positive roots of the
/// univariate restriction of H_{2n} (the Davis root set).
std::pair<CertifiedInterval, CertifiedInterval> davis_root_enclosures(int n, double tol);

/// Sharp Davis constants (l^{2n}, r^{2n}) for n >= 1.
std::pair<double, double> sharp_constants(int n, double tol = 1e-12);

/// Full per-n derivation for n >= 2: proved constants from the lemma solvers
/// plus the sharp constants.
BoundsResult proved_constants(int n, double tol = 1e-12);

}  // namespace bdg
