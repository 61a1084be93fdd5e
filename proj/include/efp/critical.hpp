#pragma once

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"
#include "efp/polynomial.hpp"

namespace efp {

// Leading constant of the EFP at alpha -> 1 (q = 0):
//   C_{r,s} = prod_{j=0}^{s-1} (j+r)! (j!)^2 / ((r-j-1)! (2j)! (2j+1)!)
Rational alpha1_constant(long r, long s);

// Monic Hahn polynomial p_n on {0, ..., r-1} evaluated at x, built from the
// three-term recurrence p_{n+1} = (x - (r-1)/2) p_n - h_n/h_{n-1} p_{n-1}
// with h_n / h_{n-1} = n^2 (r^2 - n^2) / (4 (4n^2 - 1)).
Rational hahn_value(long n, const Rational& x, long r);

// Squared norm h_n = (n!)^4 (r+n)! / ((2n)! (2n+1)! (r-n-1)!).
Rational hahn_norm(long n, long r);

// First two Taylor coefficients of the Hankel determinant at alpha = 1:
//   det H(alpha) = det H(1) (1 + c1 (1-alpha) + c2/2 (1-alpha)^2 + ...)
// computed two ways: from the closed forms
//   c1 = -s(r-1)/2
//   c2 = -s(r-1)/2 + s^2(1-2r+s^2)/4 + s^4(r^2-s^2)/(4s^2-1)
// and by recentring the exact determinant polynomial. Throws if the two
// routes disagree.
struct Alpha1Coeffs {
  Rational c1, c2;
};
Alpha1Coeffs hankel_alpha1_coeffs(long r, long s);

// First three coefficients of F_{r,s,0} / (C_{r,s} (1-alpha)^(s^2)) as a
// series in (1-alpha):
//   [1, -s(r-s)/2, s(r-s)(2s^3 r - 2s^4 - 3s^2 + 1)/(4(4s^2-1))]
// verified against the recentred exact polynomial. Throws on mismatch.
std::vector<Rational> efp_alpha1_series(long r, long s);

// Leading correction of the EFP at alpha -> 0:
//   F = 1 - C(r,s-1) C(r+q,s+q-1) alpha^(r-s+1) + O(alpha^(r-s+2)).
// Verified against the exact polynomial (all powers 1..r-s vanish).
struct Alpha0Leading {
  long exponent;
  Rational coefficient;
};
Alpha0Leading efp_alpha0_leading(const EfpParams& p);

// log G(n+1) for integer n, exactly via sum_{j=1}^{n-1} log j!.
BigFloat log_barnes_g_exact(long n, mpfr_prec_t prec = kDefaultPrec);

// Large-z expansion of log G(z+1):
//   z^2/2 log z - 3/4 z^2 + (log 2pi / 2) z - 1/12 log z + zeta'(-1)
//     + sum_{k=1}^{terms} B_{2k+2} / (4k(k+1)) z^(-2k)
BigFloat log_barnes_g_asym(const BigFloat& z, long terms);

// Coefficient of s^(-2k) in the large-s expansion of log C_{r,s} at v = s/r.
Rational alpha1_constant_series_coeff(long k, const Rational& v);

// Large-s expansion of log C_{r,s} with v = s/r fixed, through order
// s^(-2*terms):
//   -s^2 (log 4v - (1+v)^2/(2v^2) log(1+v) - (1-v)^2/(2v^2) log(1-v))
//   - 1/12 log s - 1/12 log((1-v^2)/2) + zeta'(-1) + sum_k B_series/s^(2k)
BigFloat log_alpha1_constant_asym(long s, const Rational& v, long terms,
                                  mpfr_prec_t prec = kDefaultPrec);

}  // namespace efp
