#include "efp/disordered.hpp"

#include <stdexcept>

#include "efp/constants.hpp"
#include "efp/quadrature.hpp"
#include "efp/tail_expansion.hpp"

namespace efp {

namespace {

void require_disordered(const BigFloat& u, const BigFloat& v) {
  if (!(v > u))
    throw std::domain_error("disordered regime requires v > u (alpha > beta)");
}

}  // namespace

BigFloat disordered_rate(const BigFloat& u, const BigFloat& v) {
  if (v < u) throw std::domain_error("disordered_rate: need u <= v");
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat out = (v / u).log();
  BigFloat omv = one - v;
  // the (1-v)^2 term has a removable 0 * log(0) limit at v = 1
  if (!omv.is_zero())
    out -= (omv * omv / (2 * v * v)) * (omv / (one - u)).log();
  out -= ((one + v) * (one + v) / (2 * v * v)) * ((one + v) / (one + u)).log();
  return out;
}

BigFloat disordered_rate_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat ra = alpha.sqrt();
  BigFloat v2 = v * v;
  return -((one - ra) / 2).log() - ((one + ra) / 2).log() / v2 +
         ((one - v) * (one - v) / (4 * v2)) * alpha.log() + v.log() -
         ((one + v) * (one + v) / (2 * v2)) * (one + v).log() -
         ((one - v) * (one - v) / (2 * v2)) * (one - v).log();
}

BigFloat disordered_rate_integral(const BigFloat& alpha, const BigFloat& v,
                                  const BigFloat& tol) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat beta = ((one - v) / (one + v)) * ((one - v) / (one + v));
  auto integrand = [&](const BigFloat& a) {
    BigFloat w = (one - v) / (2 * v) - ((one + v) / (2 * v)) * a.sqrt();
    return w * w / (a * (one - a));
  };
  return integrate_adaptive(integrand, beta, alpha, tol);
}

BigFloat disordered_a2_uv(const BigFloat& u, const BigFloat& v) {
  require_disordered(u, v);
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat u2 = u * u, v2 = v * v;
  BigFloat dv = v2 - u2;
  BigFloat first = u2 * (one - v2) * (2 * v2 * v2 + 5 * u2 * v2 - u2 * u2) /
                   (64 * (dv * dv * dv));
  BigFloat second = (one + v2) * (v2 - (one - v2) * (one - v2)) /
                    (120 * ((one - v2) * (one - v2)));
  return first - second - BigFloat(Rational(1, 64), prec);
}

BigFloat disordered_a2_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat ra = alpha.sqrt();
  BigFloat v2 = v * v;
  BigFloat p = one + ra, m = one - ra;
  BigFloat den = 2 * (one + v2) * ra - (one - v2) * (one + alpha);
  BigFloat bracket = 2 * p.pow_si(4) * (v2 * v2) +
                     5 * ((one - alpha) * (one - alpha)) * v2 - m.pow_si(4);
  BigFloat first = (one - v2) * m * m * bracket / (64 * den.pow_si(3));
  BigFloat tail = BigFloat(Rational(1, 8), prec) -
                  (one + v2) / 15 + v2 * (one + v2) / (15 * (one - v2) * (one - v2));
  return first - tail / 8;
}

BigFloat disordered_a4_uv(const BigFloat& u, const BigFloat& v) {
  require_disordered(u, v);
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat u2 = u * u, v2 = v * v;
  BigFloat u4 = u2 * u2, u6 = u4 * u2, u8 = u6 * u2, u10 = u8 * u2;
  BigFloat v4 = v2 * v2, v6 = v4 * v2, v8 = v6 * v2, v10 = v8 * v2;
  BigFloat dv = v2 - u2;
  BigFloat bracket = 10 * v10 * u2 - 2 * v10 - 90 * v8 * u2 + 140 * v8 * u4 +
                     105 * v6 * u6 - 160 * v6 * u4 - 4 * v4 * u8 + 5 * v4 * u6 -
                     6 * v2 * u8 + v2 * u10 + u10;
  BigFloat first = -(u2 * (one - v2)) * bracket / (256 * dv.pow_si(6));
  BigFloat second = v6 * (v6 - 4 * v4 + 5 * v2 - 10) / (504 * (one - v2).pow_si(4));
  return first - second + BigFloat(Rational(31, 16128), prec);
}

BigFloat disordered_a4_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat ra = alpha.sqrt();
  BigFloat p = one + ra, m = one - ra;
  BigFloat v2 = v * v;
  BigFloat v4 = v2 * v2, v6 = v4 * v2, v8 = v6 * v2, v10 = v8 * v2;
  BigFloat den = 2 * (one + v2) * ra - (one - v2) * (one + alpha);
  BigFloat oma = one - alpha;
  BigFloat bracket = 8 * p.pow_si(8) * (one - 3 * ra + alpha) * v10 +
                     10 * m * m * p.pow_si(6) * (5 - 46 * ra + 5 * alpha) * v8 -
                     5 * oma.pow_si(4) * (11 + 106 * ra + 11 * alpha) * v6 +
                     m.pow_si(6) * p * p * (one + 18 * ra + alpha) * v4 -
                     m.pow_si(8) * (5 + 14 * ra + 5 * alpha) * v2 + m.pow_si(10);
  BigFloat first = -(one - v2) * m * m * bracket / (256 * den.pow_si(6));
  BigFloat second = v6 * (v6 - 4 * v4 + 5 * v2 - 10) / (504 * (one - v2).pow_si(4));
  return first - second + BigFloat(Rational(31, 16128), prec);
}

BigFloat disordered_constant_term(const BigFloat& u, const BigFloat& v) {
  require_disordered(u, v);
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat u2 = u * u, v2 = v * v;
  return ((one - u2) * v2 / (v2 - u2)).log() / 8 - ((one - v2) / 2).log() / 12 +
         zeta_prime_minus1(prec);
}

TailExpansion disordered_expansion(const Rational& v, const Rational& alpha, int order,
                                   mpfr_prec_t prec) {
  if (order < 0 || order > 2)
    throw std::domain_error("disordered_expansion: order must be 0, 1, or 2");
  Geometry g(alpha, v, prec);
  if (g.regime() != Regime::disordered)
    throw std::domain_error("disordered_expansion: (alpha, v) is not in the disordered regime");
  TailExpansion t;
  t.regime = Regime::disordered;
  t.rate_power = 2;
  t.rate = disordered_rate(g.u, g.v);
  t.log_coeff = Rational(-1, 12);
  t.constant = disordered_constant_term(g.u, g.v);
  if (order >= 1) t.corrections.emplace_back(2, disordered_a2_uv(g.u, g.v));
  if (order >= 2) t.corrections.emplace_back(4, disordered_a4_uv(g.u, g.v));
  t.error_order = 2 * order + 2;
  return t;
}

BigFloat log_efp_disordered(long s, const Rational& v, const Rational& alpha, int order,
                            mpfr_prec_t prec) {
  return disordered_expansion(v, alpha, order, prec).eval(s).value;
}

namespace {

// sigma2 and sigma2' for the particular square-root solutions.
void sigma2_particular(const BigFloat& alpha, const BigFloat& v, int sign, BigFloat& s2,
                       BigFloat& ds2) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat ra = alpha.sqrt();
  BigFloat base = (one + v * v) / (4 * v * v);
  BigFloat amp = (one - v * v) / (2 * v * v);
  if (sign >= 0) {
    s2 = base + amp * ra;
    ds2 = amp / (2 * ra);
  } else {
    s2 = base - amp * ra;
    ds2 = -(amp / (2 * ra));
  }
}

BigFloat factor2(const BigFloat& alpha, const BigFloat& v, const BigFloat& s2,
                 const BigFloat& ds2) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat c = (one - v * v) * (one - v * v) / (16 * v.pow_si(4));
  return c + ds2 * ((one + v * v) / (4 * v * v) - s2 + alpha * ds2);
}

}  // namespace

BigFloat sigma2_factor2_on_particular(const BigFloat& alpha, const BigFloat& v, int sign) {
  BigFloat s2, ds2;
  sigma2_particular(alpha, v, sign, s2, ds2);
  return factor2(alpha, v, s2, ds2);
}

BigFloat sigma2_factor1_on_linear(const BigFloat& alpha, const BigFloat& v,
                                  const BigFloat& c_i) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat base = (one + v * v) / (4 * v * v);
  BigFloat s2 = c_i * (alpha - one) - base;
  BigFloat ds2 = c_i;
  return base + s2 + (one - alpha) * ds2;
}

BigFloat sigma2_factor2_on_general(const BigFloat& alpha, const BigFloat& v,
                                   const BigFloat& c_ii) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat base = (one + v * v) / (4 * v * v);
  BigFloat s2 = c_ii * alpha + base +
                (one - v * v) * (one - v * v) / (16 * c_ii * v.pow_si(4));
  return factor2(alpha, v, s2, c_ii);
}

}  // namespace efp
