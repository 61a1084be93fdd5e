#pragma once

#include "efp/params.hpp"
#include "efp/ratfun.hpp"

namespace efp {

// Parameters of the sigma-form ODE attached to (r, s, q):
//   nu1 = nu3 = -(r+q+s)/2,  nu2 = -(r-q-s)/2,  nu4 = (r+q-s)/2,
// together with the Fuchsian exponents theta_0 = s, theta_1 = r+q,
// theta_alpha = -r, theta_infty = -(s+q).
struct PainleveNu {
  Rational nu1, nu2, nu3, nu4;
  long theta0, theta1, theta_alpha, theta_inf;

  Rational product() const { return nu1 * nu2 * nu3 * nu4; }
};

PainleveNu nu_params(const EfpParams& p);

// sigma(alpha) derived from an exact EFP polynomial:
//   sigma = alpha(alpha-1) F'/F - ((r+q+s)^2/4) alpha + ((r+q+s)q + 2rs)/4
struct SigmaData {
  RatFun sigma;
  EfpParams params;
  PainleveNu nu;
};

SigmaData sigma_from_efp(const Poly& F, const EfpParams& p);

// Residual of the second-order second-degree ODE satisfied by sigma:
//
//   a^2(a-1)^2 s'(s'')^2 + {(1-2a)(s')^2 + 2 s s' + nu1 nu2 nu3 nu4}^2
//     - prod_k (s' + nu_k^2)
//
// as an exact rational function. Identically zero whenever sigma comes from
// a genuine EFP polynomial.
RatFun sigma_form_residual(const SigmaData& sd);

}  // namespace efp
