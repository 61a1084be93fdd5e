#include <doctest.h>

#include "efp/efp_exact.hpp"
#include "efp/sigma.hpp"

using namespace efp;

TEST_SUITE("sigma") {

TEST_CASE("nu parameters") {
  PainleveNu n1 = nu_params(EfpParams(2, 1, 0));
  CHECK(n1.nu1 == Rational(-3, 2));
  CHECK(n1.nu2 == Rational(-1, 2));
  CHECK(n1.nu3 == Rational(-3, 2));
  CHECK(n1.nu4 == Rational(1, 2));
  CHECK(n1.theta0 == 1);
  CHECK(n1.theta1 == 2);
  CHECK(n1.theta_alpha == -2);
  CHECK(n1.theta_inf == -1);

  PainleveNu n2 = nu_params(EfpParams(1, 1, 0));
  CHECK(n2.nu1 == Rational(-1));
  CHECK(n2.nu2 == Rational(0));
  CHECK(n2.nu4 == Rational(0));

  PainleveNu n3 = nu_params(EfpParams(3, 2, 1));
  CHECK(n3.nu1 == Rational(-3));
  CHECK(n3.nu2 == Rational(0));
  CHECK(n3.nu4 == Rational(1));
}

TEST_CASE("sigma from F = 1 - a^2") {
  EfpParams p(2, 1, 0);
  SigmaData sd = sigma_from_efp(efp_polynomial(p), p);
  // sigma = 2a^2/(1+a) - (9/4)a + 1
  Poly a = Poly::variable();
  RatFun expect(Rational(2) * (a * a), Poly(Rational(1)) + a);
  expect += RatFun(Poly{Rational(1), Rational(-9, 4)});
  CHECK((sd.sigma - expect).is_zero());
}

TEST_CASE("sigma for constant F") {
  // F = 1 at s = 0: sigma = -((r+q)^2/4) a + (r+q) q / 4
  for (long r = 1; r <= 3; ++r)
    for (long q = 0; q <= 2; ++q) {
      EfpParams p(r, 0, q);
      SigmaData sd = sigma_from_efp(Poly(Rational(1)), p);
      long rq = r + q;
      RatFun expect(Poly{Rational(rq * q, 4), Rational(-rq * rq, 4)});
      CHECK((sd.sigma - expect).is_zero());
    }
}

TEST_CASE("sigma-form residual vanishes on small instances") {
  for (long r = 1; r <= 4; ++r)
    for (long s = 1; s <= r; ++s)
      for (long q = 0; q <= 2 && r + s + q <= 7; ++q) {
        EfpParams p(r, s, q);
        SigmaData sd = sigma_from_efp(efp_polynomial(p), p);
        CHECK(sigma_form_residual(sd).is_zero());
      }
}

TEST_CASE("negative controls") {
  EfpParams p(2, 1, 0);
  SigmaData sd = sigma_from_efp(efp_polynomial(p), p);

  SigmaData shifted = sd;
  shifted.sigma += RatFun(Rational(1));
  CHECK(!sigma_form_residual(shifted).is_zero());

  for (int k = 0; k < 4; ++k) {
    SigmaData bad = sd;
    Rational* nu[] = {&bad.nu.nu1, &bad.nu.nu2, &bad.nu.nu3, &bad.nu.nu4};
    *nu[k] += Rational(1);
    CHECK(!sigma_form_residual(bad).is_zero());
  }
}

}  // TEST_SUITE
