#pragma once

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"

namespace efp {

// Upper-tail rate of the EFP in the ordered regime (v < u), so that
// log(1 - F) = -rate * s - log s + O(1). Four equivalent routes:
// the (u, v) closed form, two (alpha, beta) closed forms, and the integral
//   rate = 2/(1-sqrt(beta)) * int_alpha^beta (1/a) sqrt((beta-a)/(1-a)) da.
BigFloat ordered_rate(const BigFloat& u, const BigFloat& v);
BigFloat ordered_rate_alpha(const BigFloat& alpha, const BigFloat& v);   // log form
BigFloat ordered_rate_alpha2(const BigFloat& alpha, const BigFloat& v);  // sqrt form
BigFloat ordered_rate_integral(const BigFloat& alpha, const BigFloat& v,
                               const BigFloat& tol);

// d(rate)/d(alpha) = -(1/(v alpha)) sqrt(((1-v)^2 - (1+v)^2 alpha)/(1-alpha)),
// and the residual of the first-order ODE it satisfies:
//   alpha^2 (alpha-1) (rate')^2 - ((1+v)^2 alpha - (1-v)^2)/v^2
BigFloat ordered_rate_derivative(const BigFloat& alpha, const BigFloat& v);
BigFloat ordered_rate_ode_residual(const BigFloat& alpha, const BigFloat& v);

// Coefficients b0, b1, b2 of the 1/s series, each in the (alpha, v) form
// and in the (u, v) form; the two must agree numerically.
BigFloat ordered_b0_alpha(const BigFloat& alpha, const BigFloat& v);
BigFloat ordered_b0_uv(const BigFloat& u, const BigFloat& v);
BigFloat ordered_b1_alpha(const BigFloat& alpha, const BigFloat& v);
BigFloat ordered_b1_uv(const BigFloat& u, const BigFloat& v);
BigFloat ordered_b2_alpha(const BigFloat& alpha, const BigFloat& v);
BigFloat ordered_b2_uv(const BigFloat& u, const BigFloat& v);

// Full expansion of log(1 - F_{r,s,0}) in the ordered regime through order
// s^(-n), n <= 2:  -rate s - log s + b0 + b1/s + b2/s^2.
// Throws when (alpha, v) is not in the ordered regime.
BigFloat log_one_minus_efp_ordered(long s, const Rational& v, const Rational& alpha,
                                   int order, mpfr_prec_t prec = kDefaultPrec);

// Large-s expansion of 2 log C(r, s-1) at r = s/v:
//   -2 (log v + (1-v)/v log(1-v)) s - log s + log(v^2/(2 pi (1-v)^3))
//   + odd and even inverse-power corrections through s^(-max_power),
// leaving an O(s^-(max_power+1)) remainder.
BigFloat log_binom_asym(long s, const Rational& v, long max_power,
                        mpfr_prec_t prec = kDefaultPrec);

}  // namespace efp
