#include <stdexcept>

#include "efp/efp_exact.hpp"
#include "efp/numbers.hpp"

namespace efp {

namespace {

// Polynomial in s auxiliary variables z_1..z_s, truncated to degree <= r-1
// in each variable, with coefficients that are polynomials in alpha. Dense
// storage, index = sum_j d_j * r^j. Truncation is sound because every factor
// below has nonnegative exponents only.
struct TruncPoly {
  long nvars;
  long cap;  // per-variable degree bound + 1
  std::vector<Poly> c;

  TruncPoly(long nvars_, long cap_) : nvars(nvars_), cap(cap_) {
    long size = 1;
    for (long i = 0; i < nvars; ++i) size *= cap;
    c.assign(size, Poly());
  }

  long stride(long var) const {
    long st = 1;
    for (long i = 0; i < var; ++i) st *= cap;
    return st;
  }

  // *this *= sum_i uni[i] z_var^i
  void mul_univariate(long var, const std::vector<Poly>& uni) {
    const long st = stride(var);
    std::vector<Poly> out(c.size());
    for (size_t idx = 0; idx < c.size(); ++idx) {
      if (c[idx].is_zero()) continue;
      long d = (static_cast<long>(idx) / st) % cap;
      for (long i = 0; i < static_cast<long>(uni.size()) && d + i < cap; ++i) {
        if (uni[i].is_zero()) continue;
        out[idx + i * st] += uni[i] * c[idx];
      }
    }
    c = std::move(out);
  }

  // *this *= (z_a - z_b)^2 = z_a^2 - 2 z_a z_b + z_b^2
  void mul_squared_difference(long a, long b) {
    const long sa = stride(a), sb = stride(b);
    std::vector<Poly> out(c.size());
    const Rational minus_two(-2);
    for (size_t idx = 0; idx < c.size(); ++idx) {
      if (c[idx].is_zero()) continue;
      long da = (static_cast<long>(idx) / sa) % cap;
      long db = (static_cast<long>(idx) / sb) % cap;
      if (da + 2 < cap) out[idx + 2 * sa] += c[idx];
      if (db + 2 < cap) out[idx + 2 * sb] += c[idx];
      if (da + 1 < cap && db + 1 < cap) out[idx + sa + sb] += minus_two * c[idx];
    }
    c = std::move(out);
  }
};

}  // namespace

Poly efp_multi_integral(const EfpParams& p) {
  if (p.s > 3)
    throw std::domain_error("efp_multi_integral: refusing s > 3 (s-fold extraction)");
  if (p.s > p.r) return Poly();
  if (p.s == 0) return Poly(Rational(1));

  const long cap = p.r;  // residues need z^(r-1) per variable
  TruncPoly t(p.s, cap);
  t.c[0] = Poly(Rational(1));

  // (alpha z + 1 - alpha)^(r+q), coefficients in alpha
  std::vector<Poly> window;
  {
    Poly a = Poly::variable();
    Poly one_minus_a{Rational(1), Rational(-1)};
    for (long i = 0; i <= p.r + p.q && i < cap; ++i)
      window.push_back(binomial(p.r + p.q, i) * (a.pow(i) * one_minus_a.pow(p.r + p.q - i)));
  }
  // (z-1)^(-s) = (-1)^s sum_m C(m+s-1, m) z^m
  std::vector<Poly> tail;
  {
    Rational sign = (p.s % 2 == 0) ? Rational(1) : Rational(-1);
    for (long m = 0; m < cap; ++m) tail.push_back(Poly(sign * binomial(m + p.s - 1, m)));
  }

  for (long j = 0; j < p.s; ++j) {
    t.mul_univariate(j, window);
    t.mul_univariate(j, tail);
  }
  for (long j = 0; j < p.s; ++j)
    for (long k = j + 1; k < p.s; ++k) t.mul_squared_difference(j, k);

  // residue at every z_j = 0: coefficient of prod z_j^(r-1)
  Poly res = t.c.back();
  Rational sign = ((p.s * (p.s + 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
  return (sign / factorial(p.s)) * res;
}

}  // namespace efp
