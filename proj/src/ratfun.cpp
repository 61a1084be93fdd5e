#include "efp/ratfun.hpp"

#include <ostream>
#include <stdexcept>

namespace efp {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  Rational lead = den_.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::pow(long e) const {
  if (e < 0) return RatFun(Poly(Rational(1)), Poly(Rational(1))) / pow(-e);
  RatFun result{Rational(1)};
  RatFun base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFun: evaluation at pole");
  return num_.eval(x) / d;
}

BigFloat RatFun::eval(const BigFloat& x) const { return num_.eval(x) / den_.eval(x); }

std::string RatFun::str(const std::string& var) const {
  if (den_ == Poly(Rational(1))) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

}  // namespace efp
