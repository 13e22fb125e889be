#pragma once

#include "bdg/poly.hpp"
#include "bdg/rational.hpp"
#include "bdg/sturm.hpp"

namespace bdg {

/// Even polynomial P1(z) = sum b[k] z^{2k} with nonnegative coefficients,
/// positive constant term and positive leading term. Any even-exponent
/// support of degree >= 2 is accepted.
struct EvenClassPoly {
  std::vector<Rational> b;  // b[k] on z^{2k}
};

/// Odd polynomial P2(z) = z * sum c[i] z^{2i} with nonnegative coefficients.
struct OddClassPoly {
  std::vector<Rational> c;  // c[i] on z^{2i+1}
};

void validate(const EvenClassPoly& p1);
void validate(const OddClassPoly& p2);
RationalPoly to_poly(const EvenClassPoly& p1);
RationalPoly to_poly(const OddClassPoly& p2);

/// Certified enclosure of the solution set S = { z : P1(z) <= P2(z) }.
/// Requires deg P2 < deg P1. If S is nonempty the result is [lo, hi] with
/// 0 < lo, S inside [lo, hi], lo within tol of inf S, hi within tol of sup S,
/// and every real root of D = P2 - P1 certified to lie in [lo, hi] (so D < 0
/// strictly outside). If D never reaches zero, status is empty.
CertifiedInterval lemma2_interval(const EvenClassPoly& p1, const OddClassPoly& p2, double tol);

/// Certified enclosure of the largest real root d2 of b0 z^{2m+1} - rhs(z),
/// where rhs is any nonzero polynomial with nonnegative coefficients and
/// degree < 2m+1 (the even-exponent right sides arising for odd n are
/// accepted as well as the classic odd form). Above hi one always has
/// b0 z^{2m+1} > rhs(z), certified by a zero root count beyond hi; lo is the
/// certified lower end of the same root enclosure.
CertifiedInterval lemma3_bound(const Rational& b0, int m, const RationalPoly& rhs, double tol);

/// Classic form: rhs = z * sum c[i] z^{2i} with c[0] > 0, c[top] > 0 and
/// top index < m.
CertifiedInterval lemma3_bound(const Rational& b0, int m, const OddClassPoly& p2, double tol);

}  // namespace bdg
