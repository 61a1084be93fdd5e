#include "efp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace efp {

Int::Int(std::string_view decimal) {
  if (mpz_init_set_str(z_, std::string(decimal).c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("Int: bad integer literal '" + std::string(decimal) + "'");
  }
}

Int Int::div_exact(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("Int: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
  if (!r.is_zero()) throw std::domain_error("Int: division is not exact");
  return q;
}

std::string Int::str() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const Int& num, const Int& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view text) {
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    throw std::invalid_argument("Rational: expected exact rational like \"3/8\", got '" +
                                std::string(text) + "' (decimals are not accepted)");
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Int(text));
  Int num(text.substr(0, slash));
  Int den(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) return pow(base.inverse(), -e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), static_cast<unsigned long>(e));
  return r;  // base canonical => powers are canonical
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Int& n) { return os << n.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace efp
