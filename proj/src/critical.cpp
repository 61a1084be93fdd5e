#include "efp/critical.hpp"

#include <stdexcept>

#include "efp/bareiss.hpp"
#include "efp/constants.hpp"
#include "efp/efp_exact.hpp"
#include "efp/numbers.hpp"

namespace efp {

Rational alpha1_constant(long r, long s) {
  if (s < 1 || s > r) throw std::domain_error("alpha1_constant: need 1 <= s <= r");
  Rational c(1);
  for (long j = 0; j < s; ++j) {
    Rational num = factorial(j + r) * factorial(j) * factorial(j);
    Rational den = factorial(r - j - 1) * factorial(2 * j) * factorial(2 * j + 1);
    c *= num / den;
  }
  return c;
}

Rational hahn_value(long n, const Rational& x, long r) {
  if (n < 0 || n > r - 1) throw std::domain_error("hahn_value: need 0 <= n <= r-1");
  Rational pm1(0), p0(1);
  Rational mid = Rational(r - 1, 2);
  for (long k = 0; k < n; ++k) {
    Rational ratio = Rational(k * k * (r * r - k * k), 4 * (4 * k * k - 1));
    Rational p1 = (x - mid) * p0 - ratio * pm1;
    pm1 = p0;
    p0 = p1;
  }
  return p0;
}

Rational hahn_norm(long n, long r) {
  if (n < 0 || n > r - 1) throw std::domain_error("hahn_norm: need 0 <= n <= r-1");
  return Rational::pow(factorial(n), 4) * factorial(r + n) /
         (factorial(2 * n) * factorial(2 * n + 1) * factorial(r - n - 1));
}

namespace {

// Taylor coefficients of p around alpha = 1 in powers of (1 - alpha).
std::vector<Rational> one_minus_alpha_coeffs(const Poly& p, size_t count) {
  Poly shifted = p.recenter(Rational(1));
  std::vector<Rational> out(count, Rational(0));
  for (size_t k = 0; k < count; ++k) {
    out[k] = shifted[k];
    if (k % 2 == 1) out[k] = -out[k];
  }
  return out;
}

}  // namespace

Alpha1Coeffs hankel_alpha1_coeffs(long r, long s) {
  if (s < 1 || s > r) throw std::domain_error("hankel_alpha1_coeffs: need 1 <= s <= r");
  Alpha1Coeffs c;
  c.c1 = Rational(-s * (r - 1), 2);
  c.c2 = Rational(-s * (r - 1), 2) + Rational(s * s, 4) * Rational(1 - 2 * r + s * s) +
         Rational::pow(Rational(s), 4) * Rational(r * r - s * s, 4 * s * s - 1);

  Poly det = det_bareiss(hankel_matrix(EfpParams(r, s, 0)));
  auto d = one_minus_alpha_coeffs(det, 3);
  if (d[0].is_zero()) throw std::runtime_error("hankel_alpha1_coeffs: det H(1) vanished");
  if (d[1] / d[0] != c.c1 || Rational(2) * d[2] / d[0] != c.c2)
    throw std::runtime_error(
        "hankel_alpha1_coeffs: closed form disagrees with the exact determinant");
  return c;
}

std::vector<Rational> efp_alpha1_series(long r, long s) {
  if (s < 1 || s > r) throw std::domain_error("efp_alpha1_series: need 1 <= s <= r");
  std::vector<Rational> formula = {
      Rational(1), Rational(-s * (r - s), 2),
      Rational(s * (r - s)) *
          Rational(2 * s * s * s * r - 2 * s * s * s * s - 3 * s * s + 1,
                   4 * (4 * s * s - 1))};

  Poly f = efp_polynomial(EfpParams(r, s, 0));
  Poly one_minus_a{Rational(1), Rational(-1)};
  Poly g = Poly::div_exact(f, one_minus_a.pow(s * s));
  auto coeffs = one_minus_alpha_coeffs(g, 3);
  Rational c = alpha1_constant(r, s);
  for (int k = 0; k < 3; ++k)
    if (coeffs[k] / c != formula[k])
      throw std::runtime_error(
          "efp_alpha1_series: closed form disagrees with the exact polynomial");
  return formula;
}

Alpha0Leading efp_alpha0_leading(const EfpParams& p) {
  if (p.s < 1 || p.s > p.r) throw std::domain_error("efp_alpha0_leading: need 1 <= s <= r");
  Alpha0Leading lead;
  lead.exponent = p.r - p.s + 1;
  lead.coefficient = binomial(p.r, p.s - 1) * binomial(p.r + p.q, p.s + p.q - 1);

  Poly f = efp_polynomial(p);
  if (f[0] != Rational(1))
    throw std::runtime_error("efp_alpha0_leading: F(0) != 1");
  for (long k = 1; k < lead.exponent; ++k)
    if (!f[static_cast<size_t>(k)].is_zero())
      throw std::runtime_error("efp_alpha0_leading: unexpected low-order term");
  if (f[static_cast<size_t>(lead.exponent)] != -lead.coefficient)
    throw std::runtime_error(
        "efp_alpha0_leading: closed form disagrees with the exact polynomial");
  return lead;
}

BigFloat log_barnes_g_exact(long n, mpfr_prec_t prec) {
  if (n < 1) throw std::domain_error("log_barnes_g_exact: need n >= 1");
  BigFloat sum(0, prec);
  Int fact(1);
  for (long j = 1; j <= n - 1; ++j) {
    fact *= Int(j);
    sum += BigFloat(Rational(fact), prec).log();
  }
  return sum;
}

BigFloat log_barnes_g_asym(const BigFloat& z, long terms) {
  const mpfr_prec_t prec = z.prec();
  BigFloat logz = z.log();
  BigFloat out = (z * z / 2) * logz - BigFloat(Rational(3, 4), prec) * (z * z) +
                 (const_log_2pi(prec) / 2) * z - logz / 12 + zeta_prime_minus1(prec);
  BigFloat zpow = z * z;
  for (long k = 1; k <= terms; ++k) {
    Rational coeff = bernoulli(2 * k + 2) / Rational(4 * k * (k + 1));
    out += BigFloat(coeff, prec) / zpow;
    zpow *= z * z;
  }
  return out;
}

Rational alpha1_constant_series_coeff(long k, const Rational& v) {
  if (k < 1) throw std::domain_error("alpha1_constant_series_coeff: need k >= 1");
  Rational v2k = Rational::pow(v, 2 * k);
  Rational onep = Rational::pow(Rational(1) + v, 2 * k);
  Rational onem = Rational::pow(Rational(1) - v, 2 * k);
  Rational out = bernoulli(2 * k + 2) / Rational(4 * k * (k + 1)) *
                 (v2k / onep + v2k / onem - Rational(2) * v2k);
  for (long m = 0; m < k; ++m) {
    Rational term = bernoulli(2 * (k - m) + 2) /
                    (Rational(Int::pow(Int(2), 2 * m + 1)) * Rational((k - m) * (k - m + 1)));
    out -= term * binomial(2 * k - 1, 2 * m);
  }
  out -= Rational(4 * k * k + 6 * k - 1) /
         (Rational(Int::pow(Int(2), 2 * k + 3)) * Rational(3 * k * (k + 1) * (2 * k + 1)));
  return out;
}

BigFloat log_alpha1_constant_asym(long s, const Rational& v, long terms, mpfr_prec_t prec) {
  if (v <= Rational(0) || v >= Rational(1))
    throw std::domain_error("log_alpha1_constant_asym: need 0 < v < 1");
  if (!(Rational(s) / v).is_integer())
    throw std::domain_error("log_alpha1_constant_asym: s/v must be an integer");
  BigFloat vf(v, prec);
  BigFloat one(1, prec);
  BigFloat lead = (4 * vf).log() - ((one + vf) * (one + vf) / (2 * vf * vf)) * (one + vf).log() -
                  ((one - vf) * (one - vf) / (2 * vf * vf)) * (one - vf).log();
  BigFloat sf(s, prec);
  BigFloat out = -(sf * sf) * lead - sf.log() / 12 -
                 BigFloat(Rational(1, 12), prec) * ((one - vf * vf) / 2).log() +
                 zeta_prime_minus1(prec);
  BigFloat spow = sf * sf;
  for (long k = 1; k <= terms; ++k) {
    out += BigFloat(alpha1_constant_series_coeff(k, v), prec) / spow;
    spow *= sf * sf;
  }
  return out;
}

}  // namespace efp
