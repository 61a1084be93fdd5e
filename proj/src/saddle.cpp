#include "efp/saddle.hpp"

#include <stdexcept>

#include "efp/constants.hpp"
#include "efp/numbers.hpp"

namespace efp {

namespace {

void require_ordered_geometry(const BigFloat& alpha, const BigFloat& v, const char* fn) {
  BigFloat root = alpha.sqrt();
  BigFloat u = (1 - root) / (1 + root);
  if (!(v < u))
    throw std::domain_error(std::string(fn) +
                            ": saddle points are real only in the ordered regime v < u");
}

}  // namespace

SaddlePoints saddle_points(const BigFloat& alpha, const BigFloat& v) {
  require_ordered_geometry(alpha, v, "saddle_points");
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat root = alpha.sqrt();
  BigFloat u = (one - root) / (one + root);
  BigFloat front = (one - alpha) / (4 * alpha * v);
  BigFloat small = (one - v * u).sqrt();   // sqrt(1 - v u)
  BigFloat large = (one - v / u).sqrt();   // sqrt(1 - v / u)
  SaddlePoints sp;
  sp.nu_minus = -(front * (large - small) * (large - small));
  sp.nu_plus = -(front * (large + small) * (large + small));
  return sp;
}

BigFloat saddle_action(const BigFloat& nu, const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(nu.prec(), std::max(alpha.prec(), v.prec()));
  BigFloat one(1, prec);
  if (!(nu < BigFloat(0, prec)))
    throw std::domain_error("saddle_action: defined for nu < 0");
  return ((one - nu) / (one - alpha * nu)).log() / v - (-nu).log();
}

BigFloat saddle_action_derivative(long k, const BigFloat& nu, const BigFloat& alpha,
                                  const BigFloat& v) {
  if (k < 1 || k > 6)
    throw std::domain_error("saddle_action_derivative: order must be 1..6");
  const mpfr_prec_t prec = std::max(nu.prec(), std::max(alpha.prec(), v.prec()));
  BigFloat one(1, prec);
  // d^k/dnu^k log(1-nu)       = -(k-1)! (1-nu)^-k
  // d^k/dnu^k log(1-alpha nu) = -(k-1)! alpha^k (1-alpha nu)^-k
  // d^k/dnu^k log(-nu)        = (-1)^(k-1) (k-1)! nu^-k
  BigFloat fact(1, prec);
  for (long i = 2; i < k; ++i) fact *= BigFloat(i, prec);
  BigFloat term_log = (alpha.pow_si(k) / (one - alpha * nu).pow_si(k) -
                       1 / (one - nu).pow_si(k)) /
                      v;
  BigFloat term_nu = 1 / nu.pow_si(k);
  if (k % 2 == 0) term_nu = -term_nu;
  return fact * (term_log - term_nu);
}

BigFloat saddle_action_second_closed(const BigFloat& nu, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(nu.prec(), v.prec());
  BigFloat one(1, prec);
  return ((one - v) * nu + one + v) / (nu * nu * (one - nu));
}

BigFloat saddle_b1_hat(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat v2 = v * v, v3 = v2 * v, v4 = v2 * v2;
  BigFloat oma = one - alpha;
  BigFloat num = oma * oma * (v4 + one) + 9 * (one - alpha * alpha) * (v3 + v) -
                 2 * (10 * alpha * alpha - 11 * alpha + 10) * v2;
  BigFloat gap = (one - v) * (one - v) - (one + v) * (one + v) * alpha;
  return -(num / (6 * oma.sqrt() * gap * gap.sqrt()));
}

BigFloat saddle_b2_hat(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat v2 = v * v, v3 = v2 * v, v4 = v2 * v2;
  BigFloat v5 = v4 * v, v6 = v4 * v2, v7 = v6 * v, v8 = v6 * v2;
  BigFloat oma = one - alpha;
  BigFloat a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;
  BigFloat gap = (one - v) * (one - v) - (one + v) * (one + v) * alpha;
  BigFloat bracket = oma.pow_si(4) * (v8 + one) +
                     18 * (one + alpha) * oma.pow_si(3) * (v7 + v) +
                     (113 * a2 + 782 * alpha + 113) * oma * oma * (v6 + v2) -
                     18 * (one - a2) * (35 * a2 - 36 * alpha + 35) * (v5 + v3) +
                     12 * (83 * (a4 + one) - 194 * (a3 + alpha) + 321 * a2) * v4;
  return bracket / (72 * oma * gap.pow_si(3));
}

BigFloat trace_k_rate(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  SaddlePoints sp = saddle_points(alpha, v);
  return 2 * saddle_action(sp.nu_minus, alpha, v) + ((one - v) / v) * alpha.log();
}

BigFloat trace_k_saddle(long s, const Rational& v, const Rational& alpha, int order,
                        mpfr_prec_t prec) {
  if (order < 0 || order > 2)
    throw std::domain_error("trace_k_saddle: order must be 0, 1, or 2");
  if (!(Rational(s) / v).is_integer())
    throw std::domain_error("trace_k_saddle: s/v must be an integer");
  BigFloat af(alpha, prec), vf(v, prec);
  Geometry g(af, vf);
  if (g.regime() != Regime::ordered)
    throw std::domain_error("trace_k_saddle: (alpha, v) is not in the ordered regime");
  BigFloat one(1, prec);
  SaddlePoints sp = saddle_points(af, vf);
  BigFloat f = one / ((one - af * sp.nu_minus * sp.nu_minus) *
                      (one - af * sp.nu_minus * sp.nu_minus));
  BigFloat s2 = saddle_action_derivative(2, sp.nu_minus, af, vf);
  BigFloat sf(s, prec);
  BigFloat expo = sf * trace_k_rate(af, vf) - sf.log();
  BigFloat series = one;
  if (order >= 1) series += saddle_b1_hat(af, vf) / sf;
  if (order >= 2) series += saddle_b2_hat(af, vf) / (sf * sf);
  return (af / (2 * const_pi(prec))) * (f / s2) * expo.exp() * series;
}

}  // namespace efp
