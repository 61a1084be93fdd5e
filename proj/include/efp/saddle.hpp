#pragma once

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"

namespace efp {

// Saddle-point machinery for the large-s behaviour of Tr K in the ordered
// regime (0 < v < u). The phase is
//   S(nu) = (1/v) log((1-nu)/(1-alpha nu)) - log(-nu),  nu < 0,
// with two real negative stationary points nu_plus < -1/sqrt(alpha) <
// nu_minus < 0 satisfying nu_plus * nu_minus = 1/alpha.

struct SaddlePoints {
  BigFloat nu_minus;
  BigFloat nu_plus;
};
SaddlePoints saddle_points(const BigFloat& alpha, const BigFloat& v);

// S and its derivatives (closed forms of the log derivatives).
BigFloat saddle_action(const BigFloat& nu, const BigFloat& alpha, const BigFloat& v);
BigFloat saddle_action_derivative(long k, const BigFloat& nu, const BigFloat& alpha,
                                  const BigFloat& v);

// S''(nu_minus) also equals ((1-v) nu + 1 + v) / (nu^2 (1 - nu)) at the
// stationary point; used as a cross-check.
BigFloat saddle_action_second_closed(const BigFloat& nu, const BigFloat& v);

// Correction coefficients of the Tr K expansion
//   Tr K = alpha/(2 pi) * f(nu-,nu-)/S''(nu-)
//          * exp(s (2 S(nu-) + (1-v)/v log alpha) - log s)
//          * (1 + b1_hat/s + b2_hat/s^2 + ...),   f(nu,mu) = (1-alpha nu mu)^-2.
BigFloat saddle_b1_hat(const BigFloat& alpha, const BigFloat& v);
BigFloat saddle_b2_hat(const BigFloat& alpha, const BigFloat& v);

// The expansion above through 1/s^order, order <= 2.
BigFloat trace_k_saddle(long s, const Rational& v, const Rational& alpha, int order,
                        mpfr_prec_t prec = kDefaultPrec);

// Exponential rate 2 S(nu-) + (1-v)/v log alpha (negative in the ordered
// regime).
BigFloat trace_k_rate(const BigFloat& alpha, const BigFloat& v);

}  // namespace efp
