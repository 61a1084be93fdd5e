#include <doctest.h>

#include <random>

#include "efp/efp_exact.hpp"
#include "efp/fredholm.hpp"
#include "efp/numbers.hpp"

using namespace efp;

namespace {
const mpfr_prec_t P = 512;
BigFloat tol10(long digits) { return BigFloat(Rational(Int(1), Int::pow(Int(10), digits)), P); }
}  // namespace

TEST_SUITE("fredholm") {

TEST_CASE("kernel polynomial") {
  // (r,s,q) = (1,1,0): E(lambda) = lambda + alpha - 1
  Rational a(1, 3);
  CHECK(kernel_poly(EfpParams(1, 1, 0), a) == Poly{a - Rational(1), Rational(1)});
  // s + q = 0: constant
  CHECK(kernel_poly(EfpParams(3, 0, 0), Rational(1, 2)).degree() == 0);
  // degree is s + q
  CHECK(kernel_poly(EfpParams(4, 2, 1), Rational(1, 4)).degree() == 3);
}

TEST_CASE("kernel polynomial matches contour quadrature") {
  // E(lambda) = (2 pi i)^-1 contour integral of (nu-1)^(r+q) nu^s
  //             / ((nu-alpha)^r (nu-lambda)) over a large circle
  EfpParams p(3, 2, 1);
  Rational alpha(1, 2);
  Poly e = kernel_poly(p, alpha);
  ContourGrid big(Rational(10), 128, P);
  BComplex lambda(BigFloat(Rational(1, 4), P), BigFloat(0, P));
  BComplex sum(P);
  BigFloat inv_m = BigFloat(1, P) / BigFloat(big.m, P);
  for (const auto& nu : big.nodes) {
    BComplex one(P);
    one.re = BigFloat(1, P);
    BComplex nm1 = nu - one;
    BComplex na = nu;
    na.re -= BigFloat(alpha, P);
    BComplex num(P);
    num.re = BigFloat(1, P);
    for (long i = 0; i < p.r + p.q; ++i) num = num * nm1;
    for (long i = 0; i < p.s; ++i) num = num * nu;
    BComplex den = na;
    for (long i = 1; i < p.r; ++i) den = den * na;
    den = den * (nu - lambda);
    // d nu = i nu (2 pi / m); the 1/(2 pi i) cancels
    sum += inv_m * ((num / den) * nu);
  }
  BigFloat expect = e.eval(BigFloat(Rational(1, 4), P));
  CHECK((sum.re - expect).abs() < tol10(25));
  CHECK(sum.im.abs() < tol10(25));
}

TEST_CASE("divided difference and diagonal") {
  Rational a(1, 2);
  KernelData kd(EfpParams(2, 1, 0), a);
  BComplex x(BigFloat(Rational(1, 5), P), BigFloat(Rational(1, 7), P));
  BComplex y(BigFloat(Rational(-1, 3), P), BigFloat(Rational(1, 11), P));
  BComplex dd = divided_difference(kd.E, x, y);
  // compare with the raw quotient
  BComplex quot = (kd.E.eval(x) - kd.E.eval(y)) / (x - y);
  CHECK((dd - quot).abs() < tol10(140));
  // antisymmetry of the numerator: dd(x,y) == dd(y,x)
  BComplex ddr = divided_difference(kd.E, y, x);
  CHECK((dd - ddr).abs() < tol10(140));
  // diagonal: E'(x)
  BComplex diag = divided_difference(kd.E, x, x);
  BComplex deriv = kd.E.derivative().eval(x);
  CHECK((diag - deriv).abs() < tol10(140));
  // (1,1,0): divided difference is identically 1
  KernelData kd1(EfpParams(1, 1, 0), a);
  BComplex one_dd = divided_difference(kd1.E, x, y);
  CHECK((one_dd.re - BigFloat(1, P)).abs() < tol10(140));
  CHECK(one_dd.im.abs() < tol10(140));
}

TEST_CASE("nystrom determinant reproduces exact values") {
  struct Case {
    long r, s, q, m;
    Rational alpha;
  };
  for (const Case& c : {Case{2, 1, 0, 64, Rational(1, 2)}, Case{1, 1, 0, 32, Rational(1, 3)},
                        Case{3, 2, 0, 64, Rational(1, 4)}, Case{3, 2, 1, 64, Rational(1, 2)},
                        Case{4, 0, 1, 32, Rational(1, 2)}}) {
    EfpParams p(c.r, c.s, c.q);
    KernelData kd(p, c.alpha);
    ContourGrid grid(c.alpha / Rational(2), c.m, P);
    BComplex det = fredholm_det_nystrom(kd, grid);
    Rational exact = efp_value(p, c.alpha);
    CHECK((det.re - BigFloat(exact, P)).abs() < tol10(10));
    CHECK(det.im.abs() < tol10(20));
  }
  // radius guard
  KernelData kd(EfpParams(2, 1, 0), Rational(1, 2));
  CHECK_THROWS(fredholm_det_nystrom(kd, ContourGrid(Rational(2, 3), 32, P)));
}

TEST_CASE("convergence in m is geometric") {
  EfpParams p(6, 3, 0);
  Rational alpha(1, 2);
  KernelData kd(p, alpha);
  BigFloat exact(efp_value(p, alpha), P);
  BigFloat prev_err(0, P);
  for (long m : {16L, 32L, 64L}) {
    ContourGrid grid(alpha / Rational(2), m, P);
    BigFloat err = (fredholm_det_nystrom(kd, grid).re - exact).abs();
    if (!prev_err.is_zero() && !err.is_zero())
      CHECK(err < prev_err / BigFloat(100, P));  // far faster than any power
    prev_err = err;
  }
}

TEST_CASE("radius robustness") {
  EfpParams p(6, 3, 0);
  Rational alpha(1, 2);
  KernelData kd(p, alpha);
  BigFloat ref(0, P);
  for (const Rational& rho :
       {alpha / Rational(4), alpha / Rational(2), Rational(3) * alpha / Rational(4)}) {
    BComplex det = fredholm_det_nystrom(kd, ContourGrid(rho, 96, P));
    if (ref.is_zero())
      ref = det.re;
    else
      CHECK((det.re - ref).abs() < tol10(10));
  }
}

TEST_CASE("determinant is invariant under diagonal conjugation") {
  EfpParams p(3, 2, 0);
  Rational alpha(1, 2);
  KernelData kd(p, alpha);
  ContourGrid grid(alpha / Rational(2), 48, P);
  auto a = nystrom_matrix(kd, grid);
  BComplex det_plain = det_one_minus(a);

  std::mt19937 rng(42);
  std::uniform_int_distribution<long> dist(1, 100);
  std::vector<BigFloat> c;
  for (long j = 0; j < grid.m; ++j) c.push_back(BigFloat(dist(rng), P));
  for (long j = 0; j < grid.m; ++j)
    for (long k = 0; k < grid.m; ++k) a[j][k] = (c[j] / c[k]) * a[j][k];
  BComplex det_conj = det_one_minus(a);
  CHECK((det_plain.re - det_conj.re).abs() < tol10(100));
  CHECK((det_plain.im - det_conj.im).abs() < tol10(100));
}

TEST_CASE("exact trace") {
  CHECK(trace_k_polynomial(EfpParams(1, 1, 0)) == Poly::variable());
  // (2,1,0): TrK = alpha^2 exactly (leading binomial C(2,0)^2 = 1)
  CHECK(trace_k_polynomial(EfpParams(2, 1, 0)) == Poly::monomial(2, Rational(1)));
  CHECK(trace_k_polynomial(EfpParams(4, 0, 1)).is_zero());

  // leading coefficient C(r,s-1) C(r+q,s+q-1) at exponent r-s+1
  for (long r = 1; r <= 5; ++r)
    for (long s = 1; s <= r; ++s)
      for (long q = 0; q <= 2; ++q) {
        Poly t = trace_k_polynomial(EfpParams(r, s, q));
        for (long k = 0; k < r - s + 1; ++k) CHECK(t[static_cast<size_t>(k)].is_zero());
        CHECK(t[static_cast<size_t>(r - s + 1)] ==
              binomial(r, s - 1) * binomial(r + q, s + q - 1));
      }

  // series truncation
  Poly full = trace_k_polynomial(EfpParams(3, 2, 1));
  Poly cut = trace_k_series(EfpParams(3, 2, 1), 3);
  CHECK(cut.degree() <= 3);
  for (long k = 0; k <= 3; ++k) CHECK(cut[static_cast<size_t>(k)] == full[static_cast<size_t>(k)]);
  CHECK_THROWS(trace_k_series(EfpParams(5, 2, 0), 2));  // below leading exponent 4
}

TEST_CASE("trace by quadrature matches the exact trace") {
  for (const auto& c : {std::pair<EfpParams, Rational>{EfpParams(1, 1, 0), Rational(1, 4)},
                        {EfpParams(3, 2, 1), Rational(1, 3)}}) {
    KernelData kd(c.first, c.second);
    ContourGrid grid(c.second / Rational(2), 64, P);
    BComplex tq = trace_k_quadrature(kd, grid);
    BigFloat te(trace_k_value(c.first, c.second), P);
    CHECK((tq.re - te).abs() < tol10(20));
    CHECK(tq.im.abs() < tol10(20));
  }
}

TEST_CASE("minus log F bounded by the trace squared structure") {
  // -log F = TrK + O(TrK^2) deep in the ordered regime
  Rational alpha(1, 16);
  for (long s : {2L, 4L, 6L}) {
    EfpParams p(2 * s, s, 0);
    Rational f = efp_value(p, alpha);
    Rational trk = trace_k_value(p, alpha);
    BigFloat lhs = (-(BigFloat(f, P).log()) - BigFloat(trk, P)).abs();
    BigFloat bound = BigFloat(trk * trk, P);
    CHECK(lhs < bound);
  }
}

}  // TEST_SUITE
