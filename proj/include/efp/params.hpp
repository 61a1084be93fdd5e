#pragma once

#include "efp/bigfloat.hpp"
#include "efp/rational.hpp"

namespace efp {

// Lattice geometry of the frozen corner: an s x (s+q) rectangle of type-2
// vertices in the top-left corner of an N x N domain-wall lattice,
// N = r + s + q. The EFP vanishes identically for s > r and equals 1 for
// s = 0.
struct EfpParams {
  long r = 1;
  long s = 0;
  long q = 0;

  EfpParams(long r_, long s_, long q_);

  long n() const { return r + s + q; }
  Rational v() const { return Rational(s, r); }
  // beta = ((1-v)/(1+v))^2; the EFP is in the disordered regime for
  // alpha > beta and in the ordered regime for alpha < beta.
  Rational beta() const;
};

enum class Regime { ordered, disordered, boundary };

// Continuous geometry (alpha, v) with the derived quantities
// u = (1-sqrt(alpha))/(1+sqrt(alpha)) and beta = ((1-v)/(1+v))^2.
struct Geometry {
  BigFloat alpha;
  BigFloat v;
  BigFloat u;
  BigFloat beta;

  Geometry(const Rational& alpha_, const Rational& v_, mpfr_prec_t prec = kDefaultPrec);
  Geometry(const BigFloat& alpha_, const BigFloat& v_);

  Regime regime() const;
};

}  // namespace efp
