#include "efp/fredholm.hpp"

#include <stdexcept>

#include "efp/constants.hpp"
#include "efp/numbers.hpp"

namespace efp {

Poly kernel_poly(const EfpParams& p, const Rational& alpha) {
  // c_i = [t^i] (1-t)^(r+q) (1-alpha t)^(-r);  E(lambda) = sum_k c_{s+q-k} lambda^k
  const long deg = p.s + p.q;
  std::vector<Rational> c(deg + 1, Rational(0));
  for (long i = 0; i <= deg; ++i) {
    Rational acc(0);
    Rational apow(1);
    for (long m = 0; m <= i; ++m) {
      long j = i - m;  // index into (1-t)^(r+q)
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      acc += binomial(m + p.r - 1, m) * apow * sign * binomial(p.r + p.q, j);
      apow *= alpha;
    }
    c[i] = acc;
  }
  Poly e;
  for (long k = 0; k <= deg; ++k) e += Poly::monomial(k, c[deg - k]);
  return e;
}

ContourGrid::ContourGrid(const Rational& radius_, long m_, mpfr_prec_t prec_)
    : radius(radius_), m(m_), prec(prec_) {
  if (m < 8) throw std::domain_error("ContourGrid: need at least 8 nodes");
  if (radius <= Rational(0)) throw std::domain_error("ContourGrid: radius must be positive");
  nodes.reserve(m);
  BigFloat rho(radius, prec);
  BigFloat two_pi = 2 * const_pi(prec);
  for (long j = 0; j < m; ++j) {
    BigFloat theta = two_pi * BigFloat(j, prec) / BigFloat(m, prec);
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    nodes.emplace_back(rho * c, rho * s);
  }
}

BComplex divided_difference(const Poly& E, const BComplex& x, const BComplex& y) {
  // (E(x)-E(y))/(x-y) = sum_{k>=1} e_k h_{k-1},  h_j = x h_{j-1} + y^j
  const mpfr_prec_t prec = x.re.prec();
  const auto& e = E.coeffs();
  BComplex acc(prec);
  if (e.size() < 2) return acc;
  BComplex h(prec);
  h.re = BigFloat(1, prec);  // h_0
  BComplex ypow = y;
  acc += BigFloat(e[1], prec) * h;
  for (size_t k = 2; k < e.size(); ++k) {
    h = x * h + ypow;
    ypow = ypow * y;
    acc += BigFloat(e[k], prec) * h;
  }
  return acc;
}

namespace {

BComplex cpow(const BComplex& z, long e, mpfr_prec_t prec) {
  BComplex result(prec);
  result.re = BigFloat(1, prec);
  BComplex base = z;
  long n = e < 0 ? -e : e;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  if (e < 0) {
    BComplex one(prec);
    one.re = BigFloat(1, prec);
    result = one / result;
  }
  return result;
}

}  // namespace

BComplex kernel_weight(const KernelData& kd, const BComplex& lambda, mpfr_prec_t prec) {
  const auto& p = kd.params;
  BComplex one(prec);
  one.re = BigFloat(1, prec);
  BComplex la_minus_alpha = lambda;
  la_minus_alpha.re -= BigFloat(kd.alpha, prec);
  BComplex la_minus_one = lambda - one;
  return cpow(la_minus_alpha, p.r, prec) *
         (cpow(la_minus_one, -(p.r + p.q), prec) * cpow(lambda, -p.s, prec));
}

BComplex kernel_value(const KernelData& kd, const BComplex& lambda, const BComplex& mu,
                      mpfr_prec_t prec) {
  BComplex dd = divided_difference(kd.E, lambda, mu);
  BComplex w = kernel_weight(kd, mu, prec);
  // 1/(2 pi i) = -i/(2 pi)
  BigFloat inv2pi = BigFloat(1, prec) / (2 * const_pi(prec));
  BComplex val = dd * w;
  return BComplex(val.im * inv2pi, -(val.re * inv2pi));
}

std::vector<std::vector<BComplex>> nystrom_matrix(const KernelData& kd,
                                                  const ContourGrid& grid) {
  const mpfr_prec_t prec = grid.prec;
  const long m = grid.m;
  BigFloat inv_m = BigFloat(1, prec) / BigFloat(m, prec);
  std::vector<BComplex> wl(m, BComplex(prec));  // w(lambda_k) * lambda_k / m
  for (long k = 0; k < m; ++k)
    wl[k] = inv_m * (kernel_weight(kd, grid.nodes[k], prec) * grid.nodes[k]);
  std::vector<std::vector<BComplex>> a(m, std::vector<BComplex>(m, BComplex(prec)));
  for (long j = 0; j < m; ++j)
    for (long k = 0; k < m; ++k)
      a[j][k] = divided_difference(kd.E, grid.nodes[j], grid.nodes[k]) * wl[k];
  return a;
}

BComplex det_one_minus(std::vector<std::vector<BComplex>> a) {
  const long n = static_cast<long>(a.size());
  if (n == 0) throw std::invalid_argument("det_one_minus: empty matrix");
  const mpfr_prec_t prec = a[0][0].re.prec();
  BComplex one(prec);
  one.re = BigFloat(1, prec);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a[i][j] = (i == j ? one - a[i][j] : -a[i][j]);

  BComplex det = one;
  for (long k = 0; k < n; ++k) {
    long pivot = k;
    BigFloat best = a[k][k].abs2();
    for (long i = k + 1; i < n; ++i) {
      BigFloat cand = a[i][k].abs2();
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best.is_zero()) return BComplex(prec);  // singular
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det = det * a[k][k];
    for (long i = k + 1; i < n; ++i) {
      BComplex f = a[i][k] / a[k][k];
      for (long j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

BComplex fredholm_det_nystrom(const KernelData& kd, const ContourGrid& grid) {
  if (!(Rational(grid.radius) < kd.alpha) || !(grid.radius < Rational(1)))
    throw std::domain_error(
        "fredholm_det_nystrom: contour radius must satisfy rho < min(alpha, 1)");
  return det_one_minus(nystrom_matrix(kd, grid));
}

BComplex trace_k_quadrature(const KernelData& kd, const ContourGrid& grid) {
  const mpfr_prec_t prec = grid.prec;
  BigFloat inv_m = BigFloat(1, prec) / BigFloat(grid.m, prec);
  BComplex sum(prec);
  for (const auto& node : grid.nodes) {
    BComplex diag = divided_difference(kd.E, node, node) *
                    (kernel_weight(kd, node, prec) * node);
    sum += inv_m * diag;
  }
  return sum;
}

Poly trace_k_polynomial(const EfpParams& p) {
  if (p.s > p.r)
    throw std::domain_error("trace_k_polynomial: representation requires s <= r");
  if (p.s == 0) return Poly();
  Poly total;
  for (long j = 0; j <= p.s - 1; ++j) {
    // A_j = [nu^(s-1-j)] (1-nu)^r (1-alpha nu)^(-(r+q))
    Poly aj;
    for (long m = 0; m <= p.s - 1 - j; ++m) {
      long i = p.s - 1 - j - m;
      Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      aj += Poly::monomial(m, binomial(m + p.r + p.q - 1, m) * sign * binomial(p.r, i));
    }
    // B_j = [mu^(s+q-1-j)] (1-mu)^(r+q) (1-alpha mu)^(-r)
    Poly bj;
    for (long m = 0; m <= p.s + p.q - 1 - j; ++m) {
      long i = p.s + p.q - 1 - j - m;
      Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
      bj += Poly::monomial(m, binomial(m + p.r - 1, m) * sign * binomial(p.r + p.q, i));
    }
    total += Poly::monomial(j, Rational(j + 1)) * (aj * bj);
  }
  Rational qsign = (p.q % 2 == 0) ? Rational(1) : Rational(-1);
  return qsign * total.shift_up(p.r - p.s + 1);
}

Poly trace_k_series(const EfpParams& p, long order) {
  if (order < p.r - p.s + 1)
    throw std::domain_error("trace_k_series: order below the leading exponent r-s+1");
  Poly full = trace_k_polynomial(p);
  Poly out;
  for (long k = 0; k <= order && k <= full.degree(); ++k)
    out += Poly::monomial(k, full[static_cast<size_t>(k)]);
  return out;
}

Rational trace_k_value(const EfpParams& p, const Rational& alpha) {
  return trace_k_polynomial(p).eval(alpha);
}

}  // namespace efp
