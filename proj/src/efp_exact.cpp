#include "efp/efp_exact.hpp"

#include <stdexcept>

#include "efp/bareiss.hpp"
#include "efp/numbers.hpp"

namespace efp {

namespace {

// m^e with 0^0 = 1, as an Int.
Int ipow(long m, long e) {
  if (e == 0) return Int(1);
  return Int::pow(Int(m), static_cast<unsigned long>(e));
}

Rational hankel_prefactor(const EfpParams& p) {
  Rational num = Rational::pow(factorial(p.q), p.s);
  Rational den(1);
  for (long k = 0; k < p.s; ++k) den *= factorial(p.q + k) * factorial(k);
  return num / den;
}

}  // namespace

std::vector<std::vector<Poly>> hankel_matrix(const EfpParams& p) {
  if (p.s < 1) throw std::domain_error("hankel_matrix: empty matrix for s = 0");
  std::vector<std::vector<Poly>> m(p.s, std::vector<Poly>(p.s));
  for (long j = 1; j <= p.s; ++j)
    for (long k = 1; k <= p.s; ++k) {
      Poly e;
      for (long mm = 0; mm < p.r; ++mm) {
        Rational c = Rational(ipow(mm, j + k - 2)) * binomial(mm + p.q, mm);
        e += Poly::monomial(mm, c);
      }
      m[j - 1][k - 1] = e;
    }
  return m;
}

Poly efp_polynomial(const EfpParams& p) {
  if (p.s > p.r) return Poly();  // frozen rectangle cannot fit: F = 0
  if (p.s == 0) return Poly(Rational(1));
  Poly det = det_bareiss(hankel_matrix(p));
  Poly shifted = det.shift_down_exact(p.s * (p.s - 1) / 2);
  Poly one_minus_a{Rational(1), Rational(-1)};
  return hankel_prefactor(p) * (one_minus_a.pow(p.s * (p.s + p.q)) * shifted);
}

Rational efp_value(const EfpParams& p, const Rational& alpha) {
  if (p.s > p.r) return Rational(0);
  if (p.s == 0) return Rational(1);
  if (alpha.is_zero()) return Rational(1);

  std::vector<std::vector<Rational>> m(p.s, std::vector<Rational>(p.s));
  // moments mu_t = sum_m m^t C(m+q,m) alpha^m, t = 0 .. 2s-2
  std::vector<Rational> mu(2 * p.s - 1, Rational(0));
  for (long t = 0; t < 2 * p.s - 1; ++t) {
    Rational apow(1);
    for (long mm = 0; mm < p.r; ++mm) {
      mu[t] += Rational(ipow(mm, t)) * binomial(mm + p.q, mm) * apow;
      apow *= alpha;
    }
  }
  for (long j = 0; j < p.s; ++j)
    for (long k = 0; k < p.s; ++k) m[j][k] = mu[j + k];

  Rational det = det_bareiss(m);
  Rational one_minus = Rational(1) - alpha;
  Rational val = hankel_prefactor(p) * Rational::pow(one_minus, p.s * (p.s + p.q)) * det /
                 Rational::pow(alpha, p.s * (p.s - 1) / 2);
  return val;
}

}  // namespace efp
