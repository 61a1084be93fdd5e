#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "efp/bigfloat.hpp"
#include "efp/rational.hpp"

namespace efp {

// Univariate polynomial over the exact rationals, coefficients stored by
// ascending power with trailing zeros trimmed. The zero polynomial has an
// empty coefficient vector and degree() == -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(Rational c);
  Poly(std::initializer_list<Rational> ascending_coeffs);
  static Poly variable();                 // x
  static Poly monomial(long k, Rational c);  // c * x^k

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](size_t k) const;  // 0 beyond the degree
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Rational& s, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(long e) const;
  Poly derivative() const;
  Poly shift_up(long k) const;  // multiply by x^k

  // Divide by x^k; throws if any coefficient below x^k is nonzero.
  Poly shift_down_exact(long k) const;

  // Quotient of an exact polynomial division; throws if a remainder is left.
  static Poly div_exact(const Poly& num, const Poly& den);

  // Quotient and remainder over the rationals.
  static void div_rem(const Poly& num, const Poly& den, Poly& quot, Poly& rem);

  // Monic gcd, computed with a primitive pseudo-remainder sequence over the
  // integers to keep coefficient growth in check.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;
  BComplex eval(const BComplex& x) const;

  // p(c + t) as a polynomial in t; exact Taylor shift.
  Poly recenter(const Rational& c) const;

  std::string str(const std::string& var = "a") const;

private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace efp
