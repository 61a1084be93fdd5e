#include "efp/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace efp {

namespace {
const Rational kZero(0);
}

Poly::Poly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::initializer_list<Rational> ascending_coeffs) : c_(ascending_coeffs) { trim(); }

Poly Poly::variable() { return monomial(1, Rational(1)); }

Poly Poly::monomial(long k, Rational c) {
  Poly p;
  if (c.is_zero()) return p;
  if (k < 0) throw std::domain_error("Poly: negative exponent");
  p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
  p.c_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::operator[](size_t k) const { return k < c_.size() ? c_[k] : kZero; }

Rational Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
  return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] + b[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a[i] - b[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Poly operator*(const Rational& s, const Poly& p) {
  Poly r;
  if (s.is_zero()) return r;
  r.c_.reserve(p.c_.size());
  for (const auto& c : p.c_) r.c_.push_back(s * c);
  return r;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw std::domain_error("Poly: negative power");
  Poly result(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(Rational(static_cast<long>(i)) * c_[i]);
  r.trim();
  return r;
}

Poly Poly::shift_up(long k) const {
  if (k < 0) throw std::domain_error("Poly: negative shift");
  Poly r;
  if (is_zero()) return r;
  r.c_.assign(static_cast<size_t>(k), Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shift_down_exact(long k) const {
  if (k < 0) throw std::domain_error("Poly: negative shift");
  if (k == 0) return *this;
  if (static_cast<long>(c_.size()) < k && !is_zero())
    throw std::domain_error("Poly: not divisible by x^k");
  for (long i = 0; i < k && i < static_cast<long>(c_.size()); ++i)
    if (!c_[i].is_zero()) throw std::domain_error("Poly: not divisible by x^k");
  Poly r;
  if (static_cast<long>(c_.size()) > k)
    r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

void Poly::div_rem(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  if (den.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  quot = Poly();
  rem = num;
  const long dd = den.degree();
  const Rational lead_inv = den.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long k = rem.degree() - dd;
    Rational c = rem.leading() * lead_inv;
    Poly t = Poly::monomial(k, c);
    quot += t;
    rem -= t * den;
  }
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
  Poly q, r;
  div_rem(num, den, q, r);
  if (!r.is_zero()) throw std::domain_error("Poly: division is not exact");
  return q;
}

namespace {

// Primitive integer image of p: multiply through by the lcm of coefficient
// denominators, divide by the gcd of numerators. Only used for gcd, where
// scalar factors are irrelevant.
std::vector<Int> primitive_int_coeffs(const Poly& p) {
  std::vector<Int> out;
  Int lcm(1);
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) lcm = Int::lcm(lcm, c.den());
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(lcm);
    out.push_back(scaled.num());  // scaled is an integer by construction
  }
  Int content(0);
  for (const auto& z : out)
    if (!z.is_zero()) content = Int::gcd(content, z);
  if (!content.is_zero() && content != Int(1))
    for (auto& z : out) z = Int::div_exact(z, content);
  return out;
}

void z_trim(std::vector<Int>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void z_make_primitive(std::vector<Int>& v) {
  Int content(0);
  for (const auto& z : v)
    if (!z.is_zero()) content = Int::gcd(content, z);
  if (content.is_zero() || content == Int(1)) return;
  for (auto& z : v) z = Int::div_exact(z, content);
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, over the integers.
std::vector<Int> z_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db) {
    long shift = static_cast<long>(a.size()) - 1 - db;
    Int la = a.back();
    for (auto& z : a) z *= lb;
    for (long i = 0; i <= db; ++i)
      a[static_cast<size_t>(shift + i)] -= la * b[static_cast<size_t>(i)];
    z_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.leading().inverse() * b;
  if (b.is_zero()) return a.leading().inverse() * a;
  std::vector<Int> u = primitive_int_coeffs(a);
  std::vector<Int> v = primitive_int_coeffs(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Int> r = z_prem(u, v);
    z_make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  Poly g;
  Rational lead(u.back(), Int(1));
  for (size_t i = 0; i < u.size(); ++i) {
    Rational c = Rational(u[i], Int(1)) / lead;
    g += Poly::monomial(static_cast<long>(i), c);
  }
  return g;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigFloat Poly::eval(const BigFloat& x) const {
  BigFloat acc(x.prec());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigFloat(c_[i], x.prec());
  return acc;
}

BComplex Poly::eval(const BComplex& x) const {
  mpfr_prec_t prec = x.re.prec();
  BComplex acc(prec);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x;
    acc.re += BigFloat(c_[i], prec);
  }
  return acc;
}

// Synthetic Horner shift: repeatedly divide by (t - c) collecting remainders.
Poly Poly::recenter(const Rational& c) const {
  if (is_zero()) return Poly();
  std::vector<Rational> work = c_;
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    for (size_t i = work.size() - 1; i-- > k;) work[i] += c * work[i + 1];
    out[k] = work[k];
  }
  Poly r;
  r.c_ = std::move(out);
  r.trim();
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += c_[i].sign() > 0 ? " + " : " - ";
    else if (c_[i].sign() < 0) out += "-";
    Rational a = c_[i].abs();
    bool unit = a.is_one() && i > 0;
    if (!unit) out += a.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace efp
