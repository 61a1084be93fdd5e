#include <doctest.h>

#include "efp/efp_exact.hpp"
#include "efp/fredholm.hpp"
#include "efp/hyp2f1.hpp"
#include "efp/quadrature.hpp"

using namespace efp;

namespace {
const mpfr_prec_t P = 512;
}

TEST_SUITE("hyp2f1") {

TEST_CASE("terminating series") {
  CHECK(hyp2f1_terminating(Rational(5, 3), 0, Rational(7), Rational(1, 2)) == Rational(1));
  // two-term series: 1 - a x / c
  CHECK(hyp2f1_terminating(Rational(3), -1, Rational(5), Rational(1, 4)) ==
        Rational(1) - Rational(3) * Rational(1, 4) / Rational(5));
  CHECK(hyp2f1_terminating(Rational(2), -2, Rational(3), Rational(1, 2)) == Rational(11, 24));
  // polynomial degree equals -b
  CHECK(hyp2f1_terminating_poly(Rational(7, 2), -5, Rational(9, 4)).degree() == 5);
  CHECK_THROWS(hyp2f1_terminating_poly(Rational(1), 2, Rational(1)));
  CHECK_THROWS(hyp2f1_terminating_poly(Rational(1), -3, Rational(-1)));
}

TEST_CASE("gauss-legendre sanity") {
  // integral of x^2 over [0,1] = 1/3, exact for n >= 2
  auto sq = [](const BigFloat& x) { return x * x; };
  BigFloat third = integrate_fixed(sq, BigFloat(0, P), BigFloat(1, P), 8);
  CHECK((third - BigFloat(Rational(1, 3), P)).abs() <
        BigFloat(Rational(Int(1), Int::pow(Int(10), 140)), P));
  // smooth integrand via adaptive doubling
  auto f = [](const BigFloat& x) { return (x * x + 1).log(); };
  BigFloat tol(Rational(Int(1), Int::pow(Int(10), 40)), P);
  BigFloat v1 = integrate_adaptive(f, BigFloat(0, P), BigFloat(1, P), tol);
  BigFloat v2 = integrate_fixed(f, BigFloat(0, P), BigFloat(1, P), 300);
  CHECK((v1 - v2).abs() < 10 * tol);
}

TEST_CASE("integrand positivity on the quadrature interval") {
  // the bracketed integrand of the closed-form log F integral stays positive
  // on (0, alpha] in the ordered regime
  EfpParams p(4, 2, 0);
  Rational alpha(1, 16);
  const long rs = p.r - p.s;
  Poly f1 = hyp2f1_terminating_poly(Rational(p.r), -p.s, Rational(rs + 1));
  Poly f2 = hyp2f1_terminating_poly(Rational(p.r), -p.s, Rational(rs));
  Poly f3 = hyp2f1_terminating_poly(Rational(p.r + 1), -(p.s - 1), Rational(rs + 2));
  Rational mix = Rational(rs) / Rational(rs + 1);
  for (long k = 1; k <= 16; ++k) {
    Rational a = alpha * Rational(k, 16);
    Rational core = f1.eval(a) * f1.eval(a) / (Rational(1) - a) - mix * f2.eval(a) * f3.eval(a);
    CHECK(core > Rational(0));
  }
}

TEST_CASE("closed-form integral against exact log F") {
  Rational alpha(1, 16);
  for (const auto& rs : {std::pair<long, long>{4, 2}, {6, 3}}) {
    EfpParams p(rs.first, rs.second, 0);
    BigFloat pred = log_efp_ordered_integral(p, alpha, P);
    BigFloat exact = BigFloat(efp_value(p, alpha), P).log();
    Rational trk = trace_k_value(p, alpha);
    BigFloat bound = 10 * BigFloat(trk * trk, P);
    CHECK((pred - exact).abs() < bound);
  }
  CHECK_THROWS(log_efp_ordered_integral(EfpParams(4, 2, 1), alpha, P));  // q != 0
  CHECK_THROWS(log_efp_ordered_integral(EfpParams(4, 2, 0), Rational(1, 2), P));
}

TEST_CASE("integral tracks minus the exact trace") {
  Rational alpha(1, 16);
  EfpParams p(8, 4, 0);
  BigFloat pred = log_efp_ordered_integral(p, alpha, P);
  Rational trk = trace_k_value(p, alpha);
  BigFloat diff = (pred + BigFloat(trk, P)).abs();
  CHECK(diff < 10 * BigFloat(trk * trk, P));
}

}  // TEST_SUITE
