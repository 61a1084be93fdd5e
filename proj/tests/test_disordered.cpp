#include <doctest.h>

#include "efp/constants.hpp"
#include "efp/disordered.hpp"
#include "efp/efp_exact.hpp"
#include "efp/tail_expansion.hpp"

using namespace efp;

namespace {
const mpfr_prec_t P = 512;
BigFloat tol10(long digits) { return BigFloat(Rational(Int(1), Int::pow(Int(10), digits)), P); }
}  // namespace

TEST_SUITE("disordered") {

TEST_CASE("rate function boundary and special values") {
  BigFloat u = BigFloat(Rational(1, 5), P);
  CHECK(disordered_rate(u, u).abs() < tol10(100));  // vanishes at v = u

  // v = 1: rate = log((1+u)^2 / (4u)) and equals -log(1-alpha)
  BigFloat one(1, P);
  BigFloat v1 = one;
  BigFloat expect = ((one + u) * (one + u) / (4 * u)).log();
  CHECK((disordered_rate(u, v1) - expect).abs() < tol10(100));
  BigFloat alpha = ((one - u) / (one + u)) * ((one - u) / (one + u));
  CHECK((disordered_rate(u, v1) + (one - alpha).log()).abs() < tol10(100));

  CHECK_THROWS(disordered_rate(BigFloat(Rational(1, 2), P), BigFloat(Rational(1, 4), P)));
}

TEST_CASE("three routes to the rate agree") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 2), Rational(1, 2)},
                         {Rational(1, 2), Rational(3, 4)},
                         {Rational(3, 4), Rational(2, 5)},
                         {Rational(9, 10), Rational(1, 5)}}) {
    Geometry g(av.first, av.second, P);
    REQUIRE(g.regime() == Regime::disordered);
    BigFloat f1 = disordered_rate(g.u, g.v);
    BigFloat f2 = disordered_rate_alpha(g.alpha, g.v);
    BigFloat f3 = disordered_rate_integral(g.alpha, g.v, tol10(40));
    CHECK((f1 - f2).abs() < tol10(30));
    CHECK((f1 - f3).abs() < tol10(30));
    CHECK(f1 > BigFloat(0, P));
  }
}

TEST_CASE("rate is increasing in v at fixed u") {
  Geometry g(Rational(1, 2), Rational(1, 2), P);
  BigFloat prev(-1, P);
  for (long k = 5; k <= 9; ++k) {
    BigFloat v = BigFloat(Rational(k, 10), P);
    BigFloat val = disordered_rate(g.u, v);
    CHECK(val > prev);
    prev = val;
  }
}

TEST_CASE("correction coefficients via both variable sets") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 2), Rational(1, 2)},
                         {Rational(1, 2), Rational(3, 4)},
                         {Rational(2, 3), Rational(5, 8)}}) {
    Geometry g(av.first, av.second, P);
    CHECK((disordered_a2_uv(g.u, g.v) - disordered_a2_alpha(g.alpha, g.v)).abs() < tol10(30));
    CHECK((disordered_a4_uv(g.u, g.v) - disordered_a4_alpha(g.alpha, g.v)).abs() < tol10(30));
  }
}

TEST_CASE("constant block limit as u -> 0") {
  // the 1/8 log(...) piece collapses at u -> 0, leaving the v-only block
  Geometry g(Rational(1, 2), Rational(1, 2), P);
  BigFloat tiny = BigFloat(Rational(Int(1), Int::pow(Int(10), 12)), P);
  BigFloat one(1, P);
  BigFloat limit_block = -((one - g.v * g.v) / 2).log() / 12 + zeta_prime_minus1(P);
  CHECK((disordered_constant_term(tiny, g.v) - limit_block).abs() < tol10(10));
}

TEST_CASE("expansion against exact values, v = 1/2, alpha = 1/2") {
  Rational v(1, 2), alpha(1, 2);
  BigFloat prev_scaled(0, P);
  for (long s : {8L, 12L}) {
    Rational f = efp_value(EfpParams(2 * s, s, 0), alpha);
    BigFloat exact = BigFloat(f, P).log();
    BigFloat pred = log_efp_disordered(s, v, alpha, 2, P);
    BigFloat scaled = (pred - exact).abs() * BigFloat(s, P).pow_si(6);
    // |err| * s^6 roughly constant
    if (!prev_scaled.is_zero()) {
      CHECK(scaled / prev_scaled < BigFloat(2, P));
      CHECK(prev_scaled / scaled < BigFloat(2, P));
    }
    prev_scaled = scaled;
  }
  // order-0 (no corrections) is much worse than order-2
  Rational f8 = efp_value(EfpParams(16, 8, 0), alpha);
  BigFloat exact8 = BigFloat(f8, P).log();
  CHECK((log_efp_disordered(8, v, alpha, 0, P) - exact8).abs() >
        100 * (log_efp_disordered(8, v, alpha, 2, P) - exact8).abs());

  CHECK_THROWS(log_efp_disordered(8, Rational(1, 4), Rational(1, 16), 2, P));  // ordered side
}

TEST_CASE("tail expansion object") {
  Rational v(1, 2), alpha(1, 2);
  TailExpansion t = disordered_expansion(v, alpha, 2, P);
  CHECK(t.regime == Regime::disordered);
  CHECK(t.rate_power == 2);
  CHECK(t.log_coeff == Rational(-1, 12));
  CHECK(t.rate > BigFloat(0, P));
  REQUIRE(t.corrections.size() == 2);
  CHECK(t.corrections[0].first == 2);
  CHECK(t.corrections[1].first == 4);
  auto val = t.eval(12);
  CHECK(val.error_order == 6);
  CHECK((val.value - log_efp_disordered(12, v, alpha, 2, P)).abs().is_zero());
  CHECK(disordered_expansion(v, alpha, 0, P).eval(12).error_order == 2);
}

TEST_CASE("reduced first-order ODE for the s^2 coefficient") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 4), Rational(1, 2)},
                         {Rational(1, 2), Rational(2, 3)}}) {
    BigFloat alpha(av.first, P), v(av.second, P);
    CHECK(sigma2_factor2_on_particular(alpha, v, -1).abs() < tol10(30));
    CHECK(sigma2_factor2_on_particular(alpha, v, +1).abs() < tol10(30));
    CHECK(sigma2_factor1_on_linear(alpha, v, BigFloat(1, P)).abs() < tol10(30));
    CHECK(sigma2_factor1_on_linear(alpha, v, BigFloat(Rational(-7, 3), P)).abs() < tol10(30));
    CHECK(sigma2_factor2_on_general(alpha, v, BigFloat(Rational(-3, 2), P)).abs() < tol10(30));
  }
}

TEST_CASE("third-order vanishing at the regime boundary") {
  // At fixed u the rate vanishes to third order at v = u. The exact cubic
  // coefficient follows from the integral representation: near a = beta(v)
  // the integrand vanishes quadratically, so
  //   rate ~ w'(beta)^2 (alpha-beta)^3 / (3 beta (1-beta)),
  // and converting alpha-beta to v-u gives rate ~ (v-u)^3 / (3 u^3 (1-u^2)).
  // (In the normalized transition variable this is the familiar cubic/12.)
  for (const Rational& alpha : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    Geometry g(alpha, Rational(1, 2), P);
    BigFloat one(1, P);
    BigFloat c3 = one / (3 * g.u.pow_si(3) * (one - g.u * g.u));

    BigFloat h = BigFloat(Rational(1, 100000), P);
    BigFloat f1 = disordered_rate(g.u, g.u + h);
    BigFloat f2 = disordered_rate(g.u, g.u + 2 * h);
    BigFloat f3 = disordered_rate(g.u, g.u + 3 * h);
    BigFloat f4 = disordered_rate(g.u, g.u + 4 * h);

    // third forward difference approaches 6 c3, within 5%
    BigFloat d3 = (-f1 + 3 * f2 - 3 * f3 + f4) / (h * h * h);
    CHECK((d3 - 6 * c3).abs() < BigFloat(Rational(1, 20), P) * (6 * c3));

    // first and second one-sided differences vanish at their h-orders
    BigFloat d1 = (f2 - f1) / h;
    BigFloat d2 = (f3 - 2 * f2 + f1) / (h * h);
    CHECK(d1.abs() < 10 * c3 * h * h);
    CHECK(d2.abs() < 15 * c3 * h);

    // direct cubic profile
    CHECK((f1 / (h * h * h) - c3).abs() < BigFloat(Rational(1, 20), P) * c3);
  }
}

}  // TEST_SUITE
