#include "efp/ordered.hpp"

#include <stdexcept>

#include "efp/constants.hpp"
#include "efp/numbers.hpp"
#include "efp/quadrature.hpp"
#include "efp/tail_expansion.hpp"

namespace efp {

namespace {

void require_ordered(const BigFloat& small, const BigFloat& large, const char* fn) {
  if (!(small < large))
    throw std::domain_error(std::string(fn) + ": ordered regime requires v < u (alpha < beta)");
}

BigFloat beta_of(const BigFloat& v) {
  BigFloat one(1, v.prec());
  BigFloat r = (one - v) / (one + v);
  return r * r;
}

}  // namespace

BigFloat ordered_rate(const BigFloat& u, const BigFloat& v) {
  if (u < v) throw std::domain_error("ordered_rate: need v <= u");
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat first = ((one - v * u).sqrt() + (u * (u - v)).sqrt()) / (one - u * u).sqrt();
  BigFloat second = ((u * (one - v * u)).sqrt() + (u - v).sqrt()) / ((one - u * u) * v).sqrt();
  return (4 / v) * first.log() - 4 * second.log();
}

BigFloat ordered_rate_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat beta = beta_of(v);
  BigFloat rb = beta.sqrt(), ra = alpha.sqrt();
  BigFloat root = ((one - alpha) * (beta - alpha)).sqrt();
  BigFloat first = (rb + alpha + root) / ((one + rb) * ra);
  BigFloat second = (rb - alpha + root) / ((one - rb) * ra);
  return 2 * ((one + rb) / (one - rb)) * first.log() - 2 * second.log();
}

BigFloat ordered_rate_alpha2(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat beta = beta_of(v);
  BigFloat rb = beta.sqrt(), ra = alpha.sqrt();
  BigFloat first = (((one + ra) * (rb + ra)).sqrt() + ((one - ra) * (rb - ra)).sqrt()) /
                   (2 * (one + rb) * ra).sqrt();
  BigFloat second = (((one - ra) * (rb + ra)).sqrt() + ((one + ra) * (rb - ra)).sqrt()) /
                    (2 * (one - rb) * ra).sqrt();
  return 4 * ((one + rb) / (one - rb)) * first.log() - 4 * second.log();
}

BigFloat ordered_rate_integral(const BigFloat& alpha, const BigFloat& v, const BigFloat& tol) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat beta = beta_of(v);
  if (!(alpha < beta)) throw std::domain_error("ordered_rate_integral: need alpha < beta");
  // substitute a = beta - t^2 to remove the sqrt endpoint kink at a = beta
  auto integrand = [&](const BigFloat& t) {
    return 2 * t * t / ((beta - t * t) * (one - beta + t * t).sqrt());
  };
  BigFloat upper = (beta - alpha).sqrt();
  BigFloat integral = integrate_adaptive(integrand, BigFloat(0, prec), upper, tol);
  return 2 / (one - beta.sqrt()) * integral;
}

BigFloat ordered_rate_derivative(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat num = (one - v) * (one - v) - (one + v) * (one + v) * alpha;
  return -(one / (v * alpha)) * (num / (one - alpha)).sqrt();
}

BigFloat ordered_rate_ode_residual(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat d = ordered_rate_derivative(alpha, v);
  BigFloat rhs = ((one + v) * (one + v) * alpha - (one - v) * (one - v)) / (v * v);
  return alpha * alpha * (alpha - one) * d * d - rhs;
}

BigFloat ordered_b0_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat gap = (one - v) * (one - v) - alpha * (one + v) * (one + v);
  return (alpha * v * v /
          (2 * const_pi(prec) * (one - alpha).sqrt() * gap * gap.sqrt()))
      .log();
}

BigFloat ordered_b0_uv(const BigFloat& u, const BigFloat& v) {
  require_ordered(v, u, "ordered_b0_uv");
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat gap = (u - v) * (one - u * v);
  BigFloat num = v * v * (one - u * u) * (one - u * u);
  return (num / (32 * const_pi(prec) * u.sqrt() * gap * gap.sqrt())).log();
}

BigFloat ordered_b1_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat v2 = v * v, v3 = v2 * v, v4 = v2 * v2;
  BigFloat oma = one - alpha;
  BigFloat num = (one + v4) * oma * oma + 9 * (v + v3) * (one - alpha * alpha) -
                 2 * v2 * (10 * alpha * alpha - 11 * alpha + 10);
  BigFloat gap = (one - v) * (one - v) - alpha * (one + v) * (one + v);
  return -(num / (6 * oma.sqrt() * gap * gap.sqrt()));
}

BigFloat ordered_b1_uv(const BigFloat& u, const BigFloat& v) {
  require_ordered(v, u, "ordered_b1_uv");
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat u2 = u * u, u4 = u2 * u2, v2 = v * v, v4 = v2 * v2;
  BigFloat num = 9 * v2 * (one + u4) - 36 * v * u * (one + v2) * (one + u2) -
                 (8 - 142 * v2 + 8 * v4) * u2;
  BigFloat gap = (u - v) * (one - u * v);
  return num / (48 * u.sqrt() * gap * gap.sqrt());
}

BigFloat ordered_b2_alpha(const BigFloat& alpha, const BigFloat& v) {
  const mpfr_prec_t prec = std::max(alpha.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat v2 = v * v, v3 = v2 * v, v4 = v2 * v2;
  BigFloat oma = one - alpha;
  BigFloat a2 = alpha * alpha, a3 = a2 * alpha;
  BigFloat gap = (one - v) * (one - v) - alpha * (one + v) * (one + v);
  BigFloat bracket = (a2 + 8 * alpha + one) * oma * oma * (v4 + one) -
                     4 * oma * (a3 + one) * (v3 + v) + 6 * oma.pow_si(4) * v2 +
                     4 * alpha * (a2 + alpha + one) * v2;
  return v2 * bracket / (oma * gap.pow_si(3));
}

BigFloat ordered_b2_uv(const BigFloat& u, const BigFloat& v) {
  require_ordered(v, u, "ordered_b2_uv");
  const mpfr_prec_t prec = std::max(u.prec(), v.prec());
  BigFloat one(1, prec);
  BigFloat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u4 * u2, u8 = u6 * u2;
  BigFloat v2 = v * v, v4 = v2 * v2;
  BigFloat bracket = 3 * v2 * (u8 + one) - 8 * v * u * (v2 + one) * (u6 + one) +
                     4 * u2 * (10 * v4 + v2 + 10) * (u4 + one) -
                     120 * v * u3 * (v2 + one) * (u2 + one) -
                     (16 * v4 - 370 * v2 + 16) * u4;
  return v2 * bracket / (64 * u * (u - v).pow_si(3) * (one - v * u).pow_si(3));
}

TailExpansion ordered_expansion(const Rational& v, const Rational& alpha, int order,
                                mpfr_prec_t prec) {
  if (order < 0 || order > 2)
    throw std::domain_error("ordered_expansion: order must be 0, 1, or 2");
  Geometry g(alpha, v, prec);
  if (g.regime() != Regime::ordered)
    throw std::domain_error("ordered_expansion: (alpha, v) is not in the ordered regime");
  TailExpansion t;
  t.regime = Regime::ordered;
  t.rate_power = 1;
  t.rate = ordered_rate(g.u, g.v);
  t.log_coeff = Rational(-1);
  t.constant = ordered_b0_uv(g.u, g.v);
  if (order >= 1) t.corrections.emplace_back(1, ordered_b1_uv(g.u, g.v));
  if (order >= 2) t.corrections.emplace_back(2, ordered_b2_uv(g.u, g.v));
  t.error_order = order + 1;
  return t;
}

BigFloat log_one_minus_efp_ordered(long s, const Rational& v, const Rational& alpha,
                                   int order, mpfr_prec_t prec) {
  return ordered_expansion(v, alpha, order, prec).eval(s).value;
}

BigFloat log_binom_asym(long s, const Rational& v, long max_power, mpfr_prec_t prec) {
  if (v <= Rational(0) || v >= Rational(1))
    throw std::domain_error("log_binom_asym: need 0 < v < 1");
  if (!(Rational(s) / v).is_integer())
    throw std::domain_error("log_binom_asym: s/v must be an integer");
  BigFloat vf(v, prec);
  BigFloat one(1, prec);
  BigFloat sf(s, prec);
  BigFloat out = -2 * (vf.log() + ((one - vf) / vf) * (one - vf).log()) * sf - sf.log() +
                 (vf * vf / (2 * const_pi(prec) * (one - vf).pow_si(3))).log();
  BigFloat ratio = vf / (one - vf);
  for (long n = 1; 2 * n - 1 <= max_power; ++n) {
    BigFloat b2n(bernoulli(2 * n), prec);
    BigFloat num = b2n * vf.pow_si(2 * n - 1) -
                   (b2n + BigFloat(2 * n, prec)) * ratio.pow_si(2 * n - 1) - b2n;
    out += num / (BigFloat(n * (2 * n - 1), prec) * sf.pow_si(2 * n - 1));
  }
  for (long k = 1; 2 * k <= max_power; ++k) {
    out += vf.pow_si(2 * k) /
           (BigFloat(k, prec) * (one - vf).pow_si(2 * k) * sf.pow_si(2 * k));
  }
  return out;
}

}  // namespace efp
