#include <doctest.h>

#include "efp/efp_exact.hpp"
#include "efp/numbers.hpp"
#include "efp/ordered.hpp"
#include "efp/tail_expansion.hpp"

using namespace efp;

namespace {
const mpfr_prec_t P = 512;
BigFloat tol10(long digits) { return BigFloat(Rational(Int(1), Int::pow(Int(10), digits)), P); }
}  // namespace

TEST_SUITE("ordered") {

TEST_CASE("rate vanishes at the boundary and is positive inside") {
  BigFloat u = BigFloat(Rational(3, 5), P);
  CHECK(ordered_rate(u, u).abs() < tol10(100));
  for (long k = 1; k <= 5; ++k) {
    BigFloat v = BigFloat(Rational(k, 10), P);
    CHECK(ordered_rate(u, v) > BigFloat(0, P));
  }
  CHECK_THROWS(ordered_rate(BigFloat(Rational(1, 4), P), BigFloat(Rational(1, 2), P)));
}

TEST_CASE("four routes to the rate agree") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 16), Rational(1, 2)},
                         {Rational(1, 10), Rational(1, 3)},
                         {Rational(1, 10), Rational(1, 4)},
                         {Rational(1, 25), Rational(3, 5)}}) {
    Geometry g(av.first, av.second, P);
    REQUIRE(g.regime() == Regime::ordered);
    BigFloat c1 = ordered_rate(g.u, g.v);
    BigFloat c2 = ordered_rate_alpha(g.alpha, g.v);
    BigFloat c3 = ordered_rate_alpha2(g.alpha, g.v);
    BigFloat c4 = ordered_rate_integral(g.alpha, g.v, tol10(40));
    CHECK((c1 - c2).abs() < tol10(30));
    CHECK((c1 - c3).abs() < tol10(30));
    CHECK((c1 - c4).abs() < tol10(30));
  }
}

TEST_CASE("rate derivative and its first-order ODE") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 16), Rational(1, 2)},
                         {Rational(1, 10), Rational(1, 3)}}) {
    Geometry g(av.first, av.second, P);
    CHECK(ordered_rate_ode_residual(g.alpha, g.v).abs() < tol10(30));
    CHECK(ordered_rate_derivative(g.alpha, g.v) < BigFloat(0, P));  // decreasing in alpha
  }
}

TEST_CASE("alpha -> 0 behaviour of the rate") {
  // rate + (1-v)/v log alpha -> 2 (log v + (1-v)/v log(1-v))
  Rational v(1, 2);
  BigFloat one(1, P);
  BigFloat vf(v, P);
  BigFloat limit = 2 * (vf.log() + ((one - vf) / vf) * (one - vf).log());
  BigFloat alpha = BigFloat(Rational(Int(1), Int::pow(Int(10), 12)), P);
  Geometry g(alpha, BigFloat(v, P));
  BigFloat probe = ordered_rate(g.u, g.v) + ((one - vf) / vf) * alpha.log();
  CHECK((probe - limit).abs() < tol10(10));
}

TEST_CASE("b coefficients via both variable sets") {
  for (const auto& av : {std::pair<Rational, Rational>{Rational(1, 16), Rational(1, 2)},
                         {Rational(1, 10), Rational(1, 4)},
                         {Rational(1, 25), Rational(2, 5)}}) {
    Geometry g(av.first, av.second, P);
    CHECK((ordered_b0_uv(g.u, g.v) - ordered_b0_alpha(g.alpha, g.v)).abs() < tol10(30));
    CHECK((ordered_b1_uv(g.u, g.v) - ordered_b1_alpha(g.alpha, g.v)).abs() < tol10(30));
    CHECK((ordered_b2_uv(g.u, g.v) - ordered_b2_alpha(g.alpha, g.v)).abs() < tol10(30));
  }
}

TEST_CASE("expansion against exact values, v = 1/2, alpha = 1/16") {
  Rational v(1, 2), alpha(1, 16);
  // 1 - F computed exactly as a rational before the log
  BigFloat prev_scaled(0, P);
  for (long s : {4L, 8L, 16L}) {
    Rational one_minus_f = Rational(1) - efp_value(EfpParams(2 * s, s, 0), alpha);
    BigFloat exact = BigFloat(one_minus_f, P).log();
    BigFloat pred = log_one_minus_efp_ordered(s, v, alpha, 2, P);
    BigFloat scaled = (pred - exact).abs() * BigFloat(s, P).pow_si(3);
    if (!prev_scaled.is_zero()) {
      // within a modest factor of constant (large s^-4 coefficient nearby)
      CHECK(scaled / prev_scaled < BigFloat(4, P));
      CHECK(prev_scaled / scaled < BigFloat(4, P));
    }
    prev_scaled = scaled;
  }
  CHECK_THROWS(log_one_minus_efp_ordered(8, Rational(1, 2), Rational(1, 2), 2, P));
}

TEST_CASE("tail expansion object") {
  Rational v(1, 2), alpha(1, 16);
  TailExpansion t = ordered_expansion(v, alpha, 2, P);
  CHECK(t.regime == Regime::ordered);
  CHECK(t.rate_power == 1);
  CHECK(t.log_coeff == Rational(-1));
  CHECK(t.rate > BigFloat(0, P));
  REQUIRE(t.corrections.size() == 2);
  CHECK(t.corrections[0].first == 1);
  CHECK(t.corrections[1].first == 2);
  auto val = t.eval(8);
  CHECK(val.error_order == 3);
  CHECK((val.value - log_one_minus_efp_ordered(8, v, alpha, 2, P)).abs().is_zero());
}

TEST_CASE("alpha -> 0 anchor of exact log(1-F)") {
  // exact log(1-F) - (r-s+1) log alpha -> 2 log C(r, s-1)
  EfpParams p(3, 2, 0);
  Poly f = efp_polynomial(p);
  Rational alpha(Int(1), Int::pow(Int(10), 10));
  Rational one_minus_f = Rational(1) - f.eval(alpha);
  BigFloat probe = BigFloat(one_minus_f, P).log() -
                   BigFloat(p.r - p.s + 1, P) * BigFloat(alpha, P).log();
  BigFloat limit = 2 * BigFloat(binomial(p.r, p.s - 1), P).log();
  CHECK((probe - limit).abs() < tol10(8));
}

TEST_CASE("binomial asymptotics") {
  Rational v(1, 2);
  // leading coefficient at v=1/2 is 4 log 2
  BigFloat lead = 2 * (BigFloat(Rational(1, 2), P).log() +
                       BigFloat(Rational(1, 2), P).log());
  CHECK((-lead - 4 * BigFloat(2, P).log()).abs() < tol10(100));

  BigFloat err8 = (log_binom_asym(8, v, 2, P) - 2 * BigFloat(binomial(16, 7), P).log()).abs();
  BigFloat err16 =
      (log_binom_asym(16, v, 2, P) - 2 * BigFloat(binomial(32, 15), P).log()).abs();
  CHECK(err8 < BigFloat(Rational(1, 100), P));
  // error at the s^-3 scale: ~8x shrink when s doubles
  CHECK(err8 / err16 > BigFloat(5, P));
  CHECK(err8 / err16 < BigFloat(13, P));
  // keeping corrections through s^-4 shrinks the error further
  BigFloat err8_deep =
      (log_binom_asym(8, v, 4, P) - 2 * BigFloat(binomial(16, 7), P).log()).abs();
  CHECK(err8_deep < err8 / BigFloat(10, P));

  CHECK_THROWS(log_binom_asym(7, Rational(2, 5), 2, P));  // s/v not integer
}

}  // TEST_SUITE
