#pragma once

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"

namespace efp {

// Lower-tail rate of the EFP in the disordered regime (v > u), so that
// log F = -rate * s^2 + O(log s):
//   rate = log(v/u) - (1-v)^2/(2v^2) log((1-v)/(1-u))
//                   - (1+v)^2/(2v^2) log((1+v)/(1+u))
// Requires u <= v < 1 (equality gives 0). Three equivalent routes are
// provided; they must agree to working precision.
BigFloat disordered_rate(const BigFloat& u, const BigFloat& v);
BigFloat disordered_rate_alpha(const BigFloat& alpha, const BigFloat& v);
BigFloat disordered_rate_integral(const BigFloat& alpha, const BigFloat& v,
                                  const BigFloat& tol);

// Correction coefficients of the s^(-2) and s^(-4) terms, each in the
// (u, v) form and in the (alpha, v) form; the two must agree numerically.
BigFloat disordered_a2_uv(const BigFloat& u, const BigFloat& v);
BigFloat disordered_a2_alpha(const BigFloat& alpha, const BigFloat& v);
BigFloat disordered_a4_uv(const BigFloat& u, const BigFloat& v);
BigFloat disordered_a4_alpha(const BigFloat& alpha, const BigFloat& v);

// The s^0 block of the expansion:
//   1/8 log((1-u^2) v^2 / (v^2-u^2)) - 1/12 log((1-v^2)/2) + zeta'(-1)
BigFloat disordered_constant_term(const BigFloat& u, const BigFloat& v);

// Full expansion of log F_{r,s,0} in the disordered regime through order
// s^(-2n), n <= 2:
//   -rate s^2 - 1/12 log s + constant + a2/s^2 + a4/s^4
// Throws when (alpha, v) is not in the disordered regime.
BigFloat log_efp_disordered(long s, const Rational& v, const Rational& alpha, int order,
                            mpfr_prec_t prec = kDefaultPrec);

// Leading-order pieces of the sigma expansion sigma = sigma2 s^2 + ...
// The reduced first-order ODE factors as
//   factor1 = (1+v^2)/(4v^2) + sigma2 + (1-alpha) sigma2'
//   factor2 = (1-v^2)^2/(16v^4) + sigma2' ((1+v^2)/(4v^2) - sigma2 + alpha sigma2')
// and the particular solutions (1+v^2)/(4v^2) +/- (1-v^2)/(2v^2) sqrt(alpha)
// annihilate factor2, while C_I (alpha - 1) - (1+v^2)/(4v^2) annihilates
// factor1. These helpers evaluate the factors on those solutions.
BigFloat sigma2_factor2_on_particular(const BigFloat& alpha, const BigFloat& v, int sign);
BigFloat sigma2_factor1_on_linear(const BigFloat& alpha, const BigFloat& v,
                                  const BigFloat& c_i);
BigFloat sigma2_factor2_on_general(const BigFloat& alpha, const BigFloat& v,
                                   const BigFloat& c_ii);

}  // namespace efp
