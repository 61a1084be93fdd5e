#pragma once

#include <iosfwd>

#include "efp/polynomial.hpp"

namespace efp {

// Ratio of two polynomials, kept canonical: gcd(num, den) = 1 and the
// denominator monic. Equality and the zero test are then syntactic.
class RatFun {
public:
  RatFun() : num_(), den_(Rational(1)) {}
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  explicit RatFun(const Rational& c) : num_(Poly(c)), den_(Rational(1)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun derivative() const;
  RatFun pow(long e) const;
  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;

  std::string str(const std::string& var = "a") const;

private:
  void canonicalize();
  Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace efp
