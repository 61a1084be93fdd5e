#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace efp {

// Arbitrary-precision integer, RAII wrapper over GMP's mpz_t.
class Int {
public:
  Int() { mpz_init(z_); }
  Int(long v) { mpz_init_set_si(z_, v); }
  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  explicit Int(std::string_view decimal);
  ~Int() { mpz_clear(z_); }

  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  Int operator-() const {
    Int r;
    mpz_neg(r.z_, z_);
    return r;
  }
  Int& operator+=(const Int& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  // Quotient of an exact division; throws if the division leaves a remainder.
  static Int div_exact(const Int& a, const Int& b);

  static Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  static Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  static Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }
  static Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.z_, n);
    return r;
  }
  static Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
  }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  int sign() const { return mpz_sgn(z_); }
  Int abs() const {
    Int r;
    mpz_abs(r.z_, z_);
    return r;
  }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const { return mpz_get_si(z_); }
  std::string str() const;

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

private:
  mpz_t z_;
};

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
// All arithmetic is exact; there is no rounding anywhere in this class.
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den);
  Rational(const Int& num, const Int& den);
  explicit Rational(const Int& n) {
    mpq_init(q_);
    mpq_set_z(q_, n.raw());
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  // Parses "p", "-p", or "p/q". Decimal notation is rejected.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  // Integer exponent; negative e inverts (throws on zero base).
  static Rational pow(const Rational& base, long e);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Int num() const {
    Int n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Int den() const {
    Int d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  std::string str() const;  // "p/q", or "p" when the denominator is 1
  double to_double() const { return mpq_get_d(q_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  mpq_srcptr raw() const { return q_; }

private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Int& n);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace efp
