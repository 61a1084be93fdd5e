#include "efp/hyp2f1.hpp"

#include <stdexcept>

#include "efp/numbers.hpp"
#include "efp/quadrature.hpp"

namespace efp {

Poly hyp2f1_terminating_poly(const Rational& a, long b_nonpos, const Rational& c) {
  if (b_nonpos > 0)
    throw std::domain_error("hyp2f1_terminating: b must be a nonpositive integer");
  const long n = -b_nonpos;
  Poly out(Rational(1));
  Rational term(1);
  for (long k = 0; k < n; ++k) {
    Rational ck = c + Rational(k);
    if (ck.is_zero())
      throw std::domain_error("hyp2f1_terminating: c hits a nonpositive integer in range");
    term *= (a + Rational(k)) * Rational(-n + k) / (ck * Rational(k + 1));
    out += Poly::monomial(k + 1, term);
  }
  return out;
}

Rational hyp2f1_terminating(const Rational& a, long b_nonpos, const Rational& c,
                            const Rational& x) {
  return hyp2f1_terminating_poly(a, b_nonpos, c).eval(x);
}

BigFloat log_efp_ordered_integral(const EfpParams& p, const Rational& alpha,
                                  mpfr_prec_t prec, const Rational& tol) {
  if (p.q != 0) throw std::domain_error("log_efp_ordered_integral: q = 0 only");
  if (p.s < 1 || p.s > p.r)
    throw std::domain_error("log_efp_ordered_integral: need 1 <= s <= r");
  Geometry g(alpha, Rational(p.s, p.r), prec);
  if (g.regime() != Regime::ordered)
    throw std::domain_error("log_efp_ordered_integral: (alpha, v) is not ordered");

  const long s = p.s;
  const long rs = p.r - p.s;  // s(1-v)/v, an integer
  Rational sv(p.r);           // s/v = r
  Rational c0(rs + 1);
  Poly f1 = hyp2f1_terminating_poly(sv, -s, c0);
  Poly f2 = hyp2f1_terminating_poly(sv, -s, Rational(rs));
  Poly f3 = hyp2f1_terminating_poly(sv + Rational(1), -(s - 1), Rational(rs + 2));
  Rational mix = Rational(rs) / Rational(rs + 1);  // s(1-v)/(s(1-v)+v)

  BigFloat one(1, prec);
  auto integrand = [&](const BigFloat& a) {
    BigFloat v1 = f1.eval(a);
    BigFloat v23 = f2.eval(a) * f3.eval(a);
    BigFloat core = v1 * v1 / (one - a) - BigFloat(mix, prec) * v23;
    return core * a.pow_si(rs);
  };
  BigFloat integral = integrate_adaptive(integrand, BigFloat(0, prec),
                                         BigFloat(alpha, prec), BigFloat(tol, prec));
  Rational front = Rational(-s * s) * binomial(p.r, p.s) * binomial(p.r, p.s);
  return BigFloat(front, prec) * integral;
}

}  // namespace efp
