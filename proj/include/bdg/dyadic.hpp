#pragma once

#include "bdg/rational.hpp"

#include <string>
#include <utility>

namespace bdg {

/// Dyadic rational mant/2^exp2. All interval endpoints produced by the
/// certified solvers live in this type, so bisection decisions stay exact and
/// export to binary floating point costs at most one rounding.
class Dyadic {
public:
  Dyadic() : mant_(0), exp2_(0) {}
  Dyadic(long v) : mant_(v), exp2_(0) {}
  Dyadic(mpz_class mant, unsigned long exp2) : mant_(std::move(mant)), exp2_(exp2) { normalize(); }

  static Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    unsigned long k = std::max(a.exp2_, b.exp2_);
    mpz_class ma = a.mant_ << (k - a.exp2_);
    mpz_class mb = b.mant_ << (k - b.exp2_);
    return Dyadic(ma + mb, k + 1);
  }

  /// 2^j for j >= 0.
  static Dyadic pow2(unsigned long j) { return Dyadic(mpz_class(1) << j, 0); }
  /// 2^-j.
  static Dyadic pow2neg(unsigned long j) { return Dyadic(1, j); }

  Dyadic operator+(const Dyadic& o) const {
    unsigned long k = std::max(exp2_, o.exp2_);
    return Dyadic((mant_ << (k - exp2_)) + (o.mant_ << (k - o.exp2_)), k);
  }
  Dyadic operator-(const Dyadic& o) const {
    unsigned long k = std::max(exp2_, o.exp2_);
    return Dyadic((mant_ << (k - exp2_)) - (o.mant_ << (k - o.exp2_)), k);
  }

  /// Exact division by 2^j.
  Dyadic shr(unsigned long j) const { return Dyadic(mant_, exp2_ + j); }

  int sign() const { return sgn(mant_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a - b).sign() == 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return (a - b).sign() >= 0; }

  Rational to_rational() const { return Rational(mant_, mpz_class(1) << exp2_); }
  double to_double() const { return to_rational().to_double(); }
  std::string str() const { return to_rational().str(); }

  const mpz_class& mantissa() const { return mant_; }
  unsigned long exponent() const { return exp2_; }

private:
  void normalize() {
    if (mant_ == 0) { exp2_ = 0; return; }
    // strip shared powers of two so mantissas stay small
    unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
    unsigned long s = std::min(tz, exp2_);
    if (s > 0) { mant_ >>= s; exp2_ -= s; }
  }

  mpz_class mant_;
  unsigned long exp2_;  // value = mant_ / 2^exp2_
};

}  // namespace bdg
