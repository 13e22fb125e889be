#pragma once

#include "bdg/dyadic.hpp"
#include "bdg/poly.hpp"
#include "bdg/rational.hpp"

#include <utility>
#include <vector>

namespace bdg {

/// Exact root-count summary attached to a certified interval: distinct real
/// roots strictly below lo, in [lo, hi], and strictly above hi, all computed
/// by Sturm sign variations in exact arithmetic.
struct RootCountCertificate {
  long below = 0;
  long inside = 0;
  long above = 0;
};

/// Dyadic-endpoint enclosure with emptiness status. The lemma solvers and the
/// Davis-root extractors only ever emit nonempty intervals with 0 < lo <= hi;
/// general root isolation also emits enclosures of negative roots.
struct CertifiedInterval {
  enum class Status { empty, nonempty };

  Status status = Status::empty;
  Dyadic lo;
  Dyadic hi;
  RootCountCertificate certificate;

  bool nonempty() const { return status == Status::nonempty; }
  Rational width() const { return (hi - lo).to_rational(); }
};

/// Canonical Sturm sequence p, p', -rem(...), ... The last element is a
/// nonzero constant iff p is squarefree.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Exact number of distinct real roots of p in (a, b]. Requires a < b. If an
/// endpoint lands on a root it is nudged outward by dyadic steps 2^-k,
/// k = 20..60; the count then refers to the nudged interval. Throws after 41
/// failed nudges.
long count_roots_in(const RationalPoly& p, Rational a, Rational b);

/// Disjoint dyadic enclosures of all real roots of a squarefree p, each of
/// width <= tol, each certified to contain exactly one root, sorted ascending.
std::vector<CertifiedInterval> isolate_real_roots(const RationalPoly& p, double tol);

/// Certified enclosures (width <= tol) of the minimal and maximal positive
/// roots of p. The pair coincides when p has exactly one positive root.
/// Multiplicities are ignored (squarefree reduction is applied internally).
/// Throws std::domain_error if p has no positive real root.
std::pair<CertifiedInterval, CertifiedInterval> smallest_and_largest_positive_roots(
    const RationalPoly& p, double tol);

}  // namespace bdg
