#include "bdg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bdg {

RationalPoly RationalPoly::monomial(Rational a, std::size_t k) {
  if (a.is_zero()) return zero();
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = std::move(a);
  return RationalPoly(std::move(c));
}

const Rational& RationalPoly::leading() const {
  if (c_.empty()) throw std::domain_error("RationalPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return RationalPoly(std::move(r));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RationalPoly: division by zero polynomial");
  RationalPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {zero(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    Rational f = rem.leading() / lead;
    q[shift] = f;
    rem = rem - divisor.scaled(f) * monomial(Rational(1), shift);
  }
  return {RationalPoly(std::move(q)), rem};
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

RationalPoly RationalPoly::squarefree_part() const {
  if (is_zero()) throw std::domain_error("RationalPoly: squarefree part of zero polynomial");
  if (degree() == 0) return *this;
  RationalPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  auto [q, r] = divmod(g);
  if (!r.is_zero()) throw std::logic_error("RationalPoly: exact division failed in squarefree_part");
  return q;
}

bool RationalPoly::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

RationalPoly RationalPoly::primitive_integer_form() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) {
    mpz_class scaled_num = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  return scaled(Rational(den_lcm, num_gcd));
}

mpz_class RationalPoly::cauchy_root_bound_pow2() const {
  if (is_zero() || degree() == 0) return 1;
  Rational maxratio(0);
  const Rational lead_abs = leading().abs();
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    Rational r = c_[i].abs() / lead_abs;
    if (r > maxratio) maxratio = r;
  }
  Rational bound = Rational(1) + maxratio;
  mpz_class b = 1;
  while (Rational(b) < bound) b <<= 1;
  return b;
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (i == 0 || a != Rational(1)) os << a.str();
    if (i > 0) {
      if (a != Rational(1)) os << " ";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace bdg
