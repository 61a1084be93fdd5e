#pragma once

#include <vector>

#include "efp/params.hpp"
#include "efp/polynomial.hpp"

namespace efp {

// The s x s moment matrix whose determinant yields the EFP. Entry (j,k)
// (1-indexed) is sum_{m=0}^{r-1} m^(j+k-2) C(m+q, m) alpha^m, with the
// convention 0^0 = 1. Requires s >= 1; the s = 0 case has no matrix and the
// EFP is identically 1.
std::vector<std::vector<Poly>> hankel_matrix(const EfpParams& p);

// The emptiness formation probability F_{r,s,q} as an exact polynomial in
// alpha, via the Hankel determinant:
//
//   F = (q!)^s / prod_{k=0}^{s-1} (q+k)! k!
//       * (1-alpha)^(s(s+q)) * alpha^(-s(s-1)/2) * det(hankel_matrix)
//
// The division by the alpha power is exact (checked; a failure means a
// bug). Degree of the result is s(r+q). Returns the zero polynomial for
// s > r and the constant 1 for s = 0.
Poly efp_polynomial(const EfpParams& p);

// Exact value F_{r,s,q}(alpha) without forming the full polynomial: the
// Hankel matrix is evaluated at alpha first and the determinant taken over
// the rationals. Much faster for large s.
Rational efp_value(const EfpParams& p, const Rational& alpha);

// Result of the brute-force lattice sum. The bookkeeping tracks squared
// Boltzmann weights, i.e. exponent pairs (#type-1,2 vertices, #type-3,4
// vertices); on domain-wall lattices both counts are even in every
// configuration, and the result is exact. Should a configuration with an
// odd count ever appear, `exact` is false and only `approx` (square roots
// at `prec` bits) is meaningful.
struct EnumValue {
  bool exact = true;
  Rational value;
  BigFloat approx;
  mpfr_prec_t prec = kDefaultPrec;
};

// Exhaustive enumeration of all ice-rule configurations with domain-wall
// boundary conditions on the (r+s+q) x (r+s+q) lattice; refuses N > 6.
EnumValue efp_enumerate(const EfpParams& p, const Rational& alpha,
                        mpfr_prec_t prec = kDefaultPrec);

// The s-fold contour-integral representation of the EFP, evaluated exactly
// by iterated residue (series coefficient) extraction at z_j = 0. Refuses
// s > 3; must agree with efp_polynomial.
Poly efp_multi_integral(const EfpParams& p);

}  // namespace efp
