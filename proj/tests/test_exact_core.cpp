#include <doctest.h>

#include <random>

#include "efp/bigfloat.hpp"
#include "efp/constants.hpp"
#include "efp/numbers.hpp"
#include "efp/polynomial.hpp"
#include "efp/ratfun.hpp"

using namespace efp;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  return Rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937& rng, long max_deg) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  Poly p;
  long d = deg(rng);
  for (long i = 0; i <= d; ++i) p += Poly::monomial(i, random_rational(rng));
  return p;
}

}  // namespace

TEST_SUITE("exact_core") {

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(6, 4);
  CHECK(a.num().str() == "3");
  CHECK(a.den().str() == "2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4).den().sign() > 0);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational x = random_rational(rng), y = random_rational(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("rational parse accepts p/q only") {
  CHECK(Rational::parse("3/8") == Rational(3, 8));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1e-3"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("binomial") {
  CHECK(binomial(2, 0) == Rational(1));
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(3, -1) == Rational(0));
  CHECK(binomial(10, 5) == Rational(252));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(7) == Rational(0));
  CHECK(bernoulli(10) == Rational(5, 66));

  // defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0
  for (long n = 1; n <= 40; ++n) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k) sum += binomial(n + 1, k) * bernoulli(k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("polynomial recenter") {
  Poly p{Rational(1), Rational(0), Rational(-1)};  // 1 - a^2
  Poly q = p.recenter(Rational(1));
  CHECK(q == Poly{Rational(0), Rational(-2), Rational(-1)});  // -2t - t^2

  Poly linear = Poly::variable();
  CHECK(linear.recenter(Rational(1, 2)) == Poly{Rational(1, 2), Rational(1)});

  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng, 8);
    Rational c = random_rational(rng);
    CHECK(a.recenter(c) == a.recenter(Rational(0)).recenter(c));
    CHECK(a.recenter(c).recenter(-c) == a);  // exact round trip
  }
}

TEST_CASE("polynomial division and gcd") {
  Poly a = Poly{Rational(1), Rational(-1)};               // 1 - x
  Poly b = Poly{Rational(1), Rational(1)};                // 1 + x
  Poly prod = a * a * b;
  CHECK(Poly::div_exact(prod, a * a) == b);
  CHECK_THROWS(Poly::div_exact(prod + Poly(Rational(1)), a));

  Poly g = Poly::gcd(prod, a * b * b);
  CHECK(g == Rational(-1) * (a * b));  // monic: (x-1)(x+1)

  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    Poly u = random_poly(rng, 5), v = random_poly(rng, 5), w = random_poly(rng, 3);
    if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
    Poly g2 = Poly::gcd(u * w, v * w);
    // w divides gcd(uw, vw)
    Poly q, r;
    Poly::div_rem(g2, w, q, r);
    CHECK(r.is_zero());
  }
}

TEST_CASE("rational function zero test and canonical form") {
  Poly a = Poly::variable();
  RatFun zero(Poly(), Poly(Rational(1)));
  CHECK(zero.is_zero());
  RatFun cancel(a - a, Poly(Rational(1)) + a);
  CHECK(cancel.is_zero());
  RatFun nz(a, Poly(Rational(1)) + a);
  CHECK(!nz.is_zero());
  CHECK(nz.den().leading().is_one());

  // (a^2-1)/(a-1) canonicalizes to a+1
  RatFun red(Poly{Rational(-1), Rational(0), Rational(1)}, Poly{Rational(-1), Rational(1)});
  CHECK(red.num() == Poly{Rational(1), Rational(1)});
  CHECK(red.den() == Poly(Rational(1)));
}

TEST_CASE("ratfun derivative follows quotient rule") {
  Poly a = Poly::variable();
  RatFun f(a * a, Poly(Rational(1)) + a);  // a^2/(1+a)
  RatFun d = f.derivative();
  // d = (a^2 + 2a)/(1+a)^2
  RatFun expect(a * a + Rational(2) * a, (Poly(Rational(1)) + a) * (Poly(Rational(1)) + a));
  CHECK((d - expect).is_zero());
}

TEST_CASE("bigfloat precision bookkeeping") {
  BigFloat x(Rational(1, 3), 256);
  CHECK(x.prec() == 256);
  BigFloat y(Rational(1, 7), 512);
  CHECK((x + y).prec() == 512);
  BigFloat two(2, 128);
  BigFloat r = two.sqrt();
  CHECK(r.prec() == 128);
  CHECK((r * r - two).abs() < BigFloat(Rational(1, 1000000000), 128) *
                                  BigFloat(Rational(1, 100000000000000000), 128));
}

TEST_CASE("zeta'(-1) reference value") {
  // -0.16542114370045092921391966024278064276...
  BigFloat z = zeta_prime_minus1(256);
  BigFloat ref = BigFloat(Rational::parse(
                              "-16542114370045092921391966024278064276/"
                              "100000000000000000000000000000000000000"),
                          256);
  CHECK((z - ref).abs() < BigFloat(Rational(Int(1), Int::pow(Int(10), 37)), 256));
}

}  // TEST_SUITE
