#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "efp/rational.hpp"

namespace efp {

inline constexpr mpfr_prec_t kDefaultPrec = 512;

// Floating-point value at an explicit binary precision, wrapping mpfr_t.
// The precision is part of the value: binary operations work at the larger
// of the two operand precisions, so precision never degrades silently.
class BigFloat {
public:
  BigFloat() : BigFloat(kDefaultPrec) {}
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
  BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(f_, prec);
    mpfr_set_si(f_, v, MPFR_RNDN);
  }
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(f_, prec);
    mpfr_set_q(f_, q.raw(), MPFR_RNDN);
  }
  static BigFloat from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.f_, v, MPFR_RNDN);
    return r;
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_set(f_, o.f_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(f_, mpfr_get_prec(o.f_));
    mpfr_swap(f_, o.f_);
  }
  ~BigFloat() { mpfr_clear(f_); }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(f_, mpfr_get_prec(o.f_));
      mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(f_, o.f_);
    return *this;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(f_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.f_, a.f_, b.f_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.f_, f_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend BigFloat operator*(long a, const BigFloat& b) { return BigFloat(a, b.prec()) * b; }
  friend BigFloat operator+(long a, const BigFloat& b) { return BigFloat(a, b.prec()) + b; }
  friend BigFloat operator-(long a, const BigFloat& b) { return BigFloat(a, b.prec()) - b; }
  friend BigFloat operator/(long a, const BigFloat& b) { return BigFloat(a, b.prec()) / b; }
  friend BigFloat operator/(const BigFloat& a, long b) { return a / BigFloat(b, a.prec()); }
  friend BigFloat operator*(const BigFloat& a, long b) { return a * BigFloat(b, a.prec()); }
  friend BigFloat operator+(const BigFloat& a, long b) { return a + BigFloat(b, a.prec()); }
  friend BigFloat operator-(const BigFloat& a, long b) { return a - BigFloat(b, a.prec()); }

  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.f_, f_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.f_, f_, MPFR_RNDN);
    return r;
  }
  BigFloat log() const {
    BigFloat r(prec());
    mpfr_log(r.f_, f_, MPFR_RNDN);
    return r;
  }
  BigFloat exp() const {
    BigFloat r(prec());
    mpfr_exp(r.f_, f_, MPFR_RNDN);
    return r;
  }
  BigFloat pow_si(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.f_, f_, e, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(f_); }
  bool is_zero() const { return mpfr_zero_p(f_) != 0; }
  bool is_finite() const { return mpfr_number_p(f_) != 0; }
  double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
  // Decimal rendering with the given number of significant digits.
  std::string str(size_t digits = 40) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.f_, b.f_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.f_, b.f_) == 0;
  }

  mpfr_srcptr raw() const { return f_; }
  mpfr_ptr raw() { return f_; }

private:
  mpfr_t f_;
};

inline BigFloat abs(const BigFloat& x) { return x.abs(); }
inline BigFloat sqrt(const BigFloat& x) { return x.sqrt(); }
inline BigFloat log(const BigFloat& x) { return x.log(); }
inline BigFloat exp(const BigFloat& x) { return x.exp(); }

// Complex value built from two BigFloats; just enough for contour quadrature
// and complex LU factorization.
struct BComplex {
  BigFloat re, im;

  BComplex() = default;
  explicit BComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend BComplex operator+(const BComplex& a, const BComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BComplex operator-(const BComplex& a, const BComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BComplex operator*(const BComplex& a, const BComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BComplex operator*(const BigFloat& a, const BComplex& b) {
    return {a * b.re, a * b.im};
  }
  friend BComplex operator/(const BComplex& a, const BComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BComplex operator-() const { return {-re, -im}; }
  BComplex& operator+=(const BComplex& o) { return *this = *this + o; }
  BComplex& operator-=(const BComplex& o) { return *this = *this - o; }

  BigFloat abs2() const { return re * re + im * im; }
  BigFloat abs() const { return abs2().sqrt(); }
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace efp
