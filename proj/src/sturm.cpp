#include "bdg/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bdg {

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<RationalPoly> chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    RationalPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

/// Sturm chain with every element rescaled to its positive-primitive integer
/// form. Positive per-element scaling preserves all sign variations and keeps
/// exact evaluation cheap.
struct EvalChain {
  std::vector<RationalPoly> elems;

  long variations(const Rational& x) const {
    long v = 0;
    int prev = 0;
    for (const auto& e : elems) {
      int s = e.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  long variations(const Dyadic& x) const { return variations(x.to_rational()); }
};

EvalChain make_eval_chain(const RationalPoly& p) {
  EvalChain ec;
  for (const auto& e : sturm_chain(p.primitive_integer_form()))
    ec.elems.push_back(e.primitive_integer_form());
  return ec;
}

Rational require_valid_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("root isolation: tol must be a positive finite real");
  return Rational::from_double(tol);
}

/// A split point strictly inside (a, b) that is not a root of q. The midpoint
/// is slid right by shrinking dyadic offsets if it lands on a root.
Dyadic split_point(const RationalPoly& q, const Dyadic& a, const Dyadic& b) {
  Dyadic m = Dyadic::midpoint(a, b);
  if (q.sign_at(m.to_rational()) != 0) return m;
  Dyadic w = b - a;
  for (unsigned long j = 2; j <= 256; ++j) {
    Dyadic m2 = m + w.shr(j);
    if (q.sign_at(m2.to_rational()) != 0) return m2;
  }
  throw std::logic_error("root isolation: could not find a non-root split point");
}

/// Shrinks (a, b], known to contain exactly one simple root of q with
/// q(a), q(b) != 0, to width <= tol by exact sign bisection. With
/// require_positive_lo the lower endpoint is additionally driven above zero
/// (the root itself must then be positive).
CertifiedInterval refine_simple_root(const RationalPoly& q, Dyadic a, Dyadic b,
                                     const Rational& tol, bool require_positive_lo) {
  int sa = q.sign_at(a.to_rational());
  int sb = q.sign_at(b.to_rational());
  if (sa == 0 || sb == 0 || sa == sb)
    throw std::logic_error("refine_simple_root: endpoints do not bracket a single simple root");
  while ((b - a).to_rational() > tol || (require_positive_lo && a.sign() <= 0)) {
    Dyadic m = Dyadic::midpoint(a, b);
    int sm = q.sign_at(m.to_rational());
    if (sm == 0) {
      // the root is exactly m: emit a symmetric enclosure around it
      Dyadic w = b - a;
      for (unsigned long j = 2; j <= 512; ++j) {
        Dyadic d = w.shr(j);
        Dyadic lo = m - d;
        Dyadic hi = m + d;
        if (!(a < lo) || !(hi < b)) continue;
        if ((hi - lo).to_rational() > tol) continue;
        if (require_positive_lo && lo.sign() <= 0) continue;
        CertifiedInterval iv;
        iv.status = CertifiedInterval::Status::nonempty;
        iv.lo = lo;
        iv.hi = hi;
        return iv;
      }
      throw std::logic_error("refine_simple_root: could not enclose an exact dyadic root");
    }
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  CertifiedInterval iv;
  iv.status = CertifiedInterval::Status::nonempty;
  iv.lo = a;
  iv.hi = b;
  return iv;
}

/// Narrows (a, b] with root counts va - vb >= 1 down to an interval holding
/// exactly one root: the leftmost (or rightmost) root of the chain's
/// polynomial in the segment.
struct ExtremeSeg {
  Dyadic a, b;
  long va, vb;
};

ExtremeSeg isolate_extreme(const RationalPoly& q, const EvalChain& ec, ExtremeSeg s, bool leftmost) {
  while (s.va - s.vb > 1) {
    Dyadic m = split_point(q, s.a, s.b);
    long vm = ec.variations(m);
    bool left_nonempty = s.va - vm >= 1;
    if (leftmost) {
      if (left_nonempty) {
        s.b = m;
        s.vb = vm;
      } else {
        s.a = m;
        s.va = vm;
      }
    } else {
      if (vm - s.vb >= 1) {
        s.a = m;
        s.va = vm;
      } else {
        s.b = m;
        s.vb = vm;
      }
    }
  }
  return s;
}

Rational pow2_rational(long k) {
  // 2^k for k possibly negative
  if (k >= 0) return Rational(mpz_class(1) << k);
  return Rational(mpz_class(1), mpz_class(1) << (-k));
}

Rational nudge_off_root(const RationalPoly& p, Rational x, int direction, const char* which) {
  if (p.sign_at(x) != 0) return x;
  for (long k = 20; k <= 60; ++k) {
    Rational step = pow2_rational(-k);
    Rational cand = direction < 0 ? x - step : x + step;
    if (p.sign_at(cand) != 0) return cand;
  }
  throw std::runtime_error(std::string("count_roots_in: ") + which +
                           " endpoint still on a root after 41 dyadic nudges");
}

}  // namespace

long count_roots_in(const RationalPoly& p, Rational a, Rational b) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_in: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("count_roots_in: requires a < b");
  a = nudge_off_root(p, std::move(a), -1, "lower");
  b = nudge_off_root(p, std::move(b), +1, "upper");
  EvalChain ec = make_eval_chain(p);
  return ec.variations(a) - ec.variations(b);
}

std::vector<CertifiedInterval> isolate_real_roots(const RationalPoly& p, double tol) {
  Rational tol_r = require_valid_tol(tol);
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (p.degree() >= 1) {
    RationalPoly g = RationalPoly::gcd(p, p.derivative());
    if (g.degree() != 0)
      throw std::invalid_argument("isolate_real_roots: polynomial is not squarefree; gcd(p, p') = " +
                                  g.str());
  }
  if (p.degree() <= 0) return {};

  RationalPoly q = p.primitive_integer_form();
  EvalChain ec = make_eval_chain(q);
  mpz_class bound = q.cauchy_root_bound_pow2();
  Dyadic lo(-bound, 0), hi(bound, 0);
  long v_lo = ec.variations(lo);
  long v_hi = ec.variations(hi);

  struct Seg {
    Dyadic a, b;
    long va, vb;
  };
  std::vector<Seg> work{{lo, hi, v_lo, v_hi}};
  std::vector<Seg> leaves;
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    long count = s.va - s.vb;
    if (count == 0) continue;
    if (count == 1) {
      leaves.push_back(s);
      continue;
    }
    Dyadic m = split_point(q, s.a, s.b);
    long vm = ec.variations(m);
    work.push_back({s.a, m, s.va, vm});
    work.push_back({m, s.b, vm, s.vb});
  }

  std::vector<CertifiedInterval> out;
  out.reserve(leaves.size());
  for (const Seg& s : leaves) out.push_back(refine_simple_root(q, s.a, s.b, tol_r, false));
  std::sort(out.begin(), out.end(), [](const CertifiedInterval& x, const CertifiedInterval& y) {
    return x.lo.to_rational() < y.lo.to_rational();
  });

  long total = v_lo - v_hi;
  for (auto& iv : out) {
    long at_lo = ec.variations(iv.lo);
    long at_hi = ec.variations(iv.hi);
    iv.certificate.below = v_lo - at_lo;
    iv.certificate.inside = at_lo - at_hi;
    iv.certificate.above = at_hi - v_hi;
    if (iv.certificate.inside != 1 ||
        iv.certificate.below + iv.certificate.inside + iv.certificate.above != total)
      throw std::logic_error("isolate_real_roots: certificate check failed");
  }
  return out;
}

std::pair<CertifiedInterval, CertifiedInterval> smallest_and_largest_positive_roots(
    const RationalPoly& p, double tol) {
  Rational tol_r = require_valid_tol(tol);
  if (p.is_zero()) throw std::invalid_argument("smallest_and_largest_positive_roots: zero polynomial");

  // strip roots at zero; they are not positive and would break V(0)
  std::size_t shift = 0;
  while (shift < p.coeffs().size() && p.coeffs()[shift].is_zero()) ++shift;
  std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
  RationalPoly stripped{std::move(shifted)};
  if (stripped.degree() <= 0)
    throw std::domain_error("smallest_and_largest_positive_roots: polynomial has no positive roots");

  RationalPoly q = stripped.squarefree_part().primitive_integer_form();
  EvalChain ec = make_eval_chain(q);
  mpz_class bound = q.cauchy_root_bound_pow2();
  Dyadic zero(0), top(bound, 0);
  long v_zero = ec.variations(zero);
  long v_top = ec.variations(top);
  long positives = v_zero - v_top;
  if (positives <= 0)
    throw std::domain_error("smallest_and_largest_positive_roots: polynomial has no positive roots");

  long v_neg = ec.variations(Dyadic(-bound, 0));
  auto finish = [&](const ExtremeSeg& s) {
    CertifiedInterval iv = refine_simple_root(q, s.a, s.b, tol_r, true);
    long at_lo = ec.variations(iv.lo);
    long at_hi = ec.variations(iv.hi);
    iv.certificate.below = v_neg - at_lo;
    iv.certificate.inside = at_lo - at_hi;
    iv.certificate.above = at_hi - v_top;
    if (iv.certificate.inside != 1)
      throw std::logic_error("smallest_and_largest_positive_roots: certificate check failed");
    return iv;
  };

  ExtremeSeg base{zero, top, v_zero, v_top};
  CertifiedInterval smallest = finish(isolate_extreme(q, ec, base, true));
  CertifiedInterval largest =
      positives == 1 ? smallest : finish(isolate_extreme(q, ec, base, false));
  return {smallest, largest};
}

}  // namespace bdg
