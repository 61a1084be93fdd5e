#include "efp/sigma.hpp"

#include <stdexcept>

namespace efp {

PainleveNu nu_params(const EfpParams& p) {
  PainleveNu nu;
  nu.nu1 = Rational(-(p.r + p.q + p.s), 2);
  nu.nu3 = nu.nu1;
  nu.nu2 = Rational(-(p.r - p.q - p.s), 2);
  nu.nu4 = Rational(p.r + p.q - p.s, 2);
  nu.theta0 = p.s;
  nu.theta1 = p.r + p.q;
  nu.theta_alpha = -p.r;
  nu.theta_inf = -(p.s + p.q);
  return nu;
}

SigmaData sigma_from_efp(const Poly& F, const EfpParams& p) {
  if (F.is_zero()) throw std::domain_error("sigma_from_efp: F must not vanish identically");
  Poly a = Poly::variable();
  Poly a_am1 = a * (a - Poly(Rational(1)));
  RatFun log_deriv(a_am1 * F.derivative(), F);
  long rqs = p.r + p.q + p.s;
  Rational lin1 = Rational(-rqs * rqs, 4);
  Rational lin0 = Rational(rqs * p.q + 2 * p.r * p.s, 4);
  RatFun linear(Poly{lin0, lin1});
  return SigmaData{log_deriv + linear, p, nu_params(p)};
}

RatFun sigma_form_residual(const SigmaData& sd) {
  const RatFun& s = sd.sigma;
  RatFun s1 = s.derivative();
  RatFun s2 = s1.derivative();

  Poly a = Poly::variable();
  Poly a_am1 = a * (a - Poly(Rational(1)));
  RatFun lead(a_am1 * a_am1);

  RatFun lhs1 = lead * s1 * s2 * s2;

  Poly one_minus_2a{Rational(1), Rational(-2)};
  RatFun inner = RatFun(one_minus_2a) * s1 * s1 + RatFun(Rational(2)) * s * s1 +
                 RatFun(sd.nu.product());
  RatFun lhs2 = inner * inner;

  RatFun rhs{Rational(1)};
  for (const Rational& nu : {sd.nu.nu1, sd.nu.nu2, sd.nu.nu3, sd.nu.nu4})
    rhs *= s1 + RatFun(nu * nu);

  return lhs1 + lhs2 - rhs;
}

}  // namespace efp
