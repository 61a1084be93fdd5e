#pragma once

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"
#include "efp/polynomial.hpp"

namespace efp {

// Terminating Gauss hypergeometric series 2F1(a, -n; c; x) with b = -n a
// nonpositive integer: exactly n+1 terms, so the value is an exact
// polynomial in x. Throws if (c)_k hits zero before the series terminates.
Poly hyp2f1_terminating_poly(const Rational& a, long b_nonpos, const Rational& c);
Rational hyp2f1_terminating(const Rational& a, long b_nonpos, const Rational& c,
                            const Rational& x);

// Closed-form prediction of log F_{r,s,0} in the ordered regime as a single
// integral over [0, alpha]:
//
//   log F = -s^2 C(r,s)^2 int_0^alpha { [2F1(s/v, -s; 1+s(1-v)/v; a)]^2/(1-a)
//            - s(1-v)/(s(1-v)+v) * 2F1(s/v, -s; s(1-v)/v; a)
//                                 * 2F1(1+s/v, 1-s; 2+s(1-v)/v; a) }
//            * a^(s(1-v)/v) da
//
// The exponent s(1-v)/v = r-s is an integer, so the integrand is
// single-valued; it is evaluated by Gauss-Legendre quadrature with node
// doubling until two successive results agree to `tol`.
BigFloat log_efp_ordered_integral(const EfpParams& p, const Rational& alpha,
                                  mpfr_prec_t prec = kDefaultPrec,
                                  const Rational& tol = Rational(Int(1), Int::pow(Int(10), 20)));

}  // namespace efp
