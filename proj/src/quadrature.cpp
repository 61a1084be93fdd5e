#include "efp/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "efp/constants.hpp"

namespace efp {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
void legendre(long n, const BigFloat& x, BigFloat& p, BigFloat& dp) {
  const mpfr_prec_t prec = x.prec();
  BigFloat pm1(1, prec), pk = x;
  for (long k = 1; k < n; ++k) {
    BigFloat pk1 = (BigFloat(2 * k + 1, prec) * x * pk - BigFloat(k, prec) * pm1) /
                   BigFloat(k + 1, prec);
    pm1 = pk;
    pk = pk1;
  }
  p = pk;
  dp = BigFloat(n, prec) * (x * pk - pm1) / (x * x - BigFloat(1, prec));
}

GaussLegendre compute_rule(long n, mpfr_prec_t prec) {
  GaussLegendre rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  const mpfr_prec_t wp = prec + 32;
  BigFloat pi = const_pi(wp);
  BigFloat limit(wp);
  mpfr_set_ui_2exp(limit.raw(), 1, -(prec + 16), MPFR_RNDN);

  for (long i = 0; i < n; ++i) {
    // Chebyshev seed cos(pi (i + 3/4) / (n + 1/2))
    BigFloat x(wp);
    BigFloat arg = pi * (BigFloat(4 * i + 3, wp) / BigFloat(4 * n + 2, wp));
    mpfr_cos(x.raw(), arg.raw(), MPFR_RNDN);
    BigFloat p(wp), dp(wp);
    for (int iter = 0; iter < 200; ++iter) {
      legendre(n, x, p, dp);
      BigFloat dx = p / dp;
      x -= dx;
      if (dx.abs() < limit) break;
    }
    legendre(n, x, p, dp);
    BigFloat w = BigFloat(2, wp) / ((BigFloat(1, wp) - x * x) * dp * dp);
    BigFloat xn(prec), wn(prec);
    mpfr_set(xn.raw(), x.raw(), MPFR_RNDN);
    mpfr_set(wn.raw(), w.raw(), MPFR_RNDN);
    rule.nodes.push_back(std::move(xn));
    rule.weights.push_back(std::move(wn));
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(long n, mpfr_prec_t prec) {
  static std::map<std::pair<long, mpfr_prec_t>, GaussLegendre> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_rule(n, prec)).first;
  return it->second;
}

BigFloat integrate_fixed(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                         const BigFloat& b, long n) {
  const mpfr_prec_t prec = std::max(a.prec(), b.prec());
  const GaussLegendre& rule = gauss_legendre(n, prec);
  BigFloat half_len = (b - a) / 2;
  BigFloat mid = (a + b) / 2;
  BigFloat sum(0, prec);
  for (long i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half_len * rule.nodes[i]);
  return half_len * sum;
}

BigFloat integrate_adaptive(const std::function<BigFloat(const BigFloat&)>& f,
                            const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                            long max_nodes) {
  BigFloat prev = integrate_fixed(f, a, b, 16);
  for (long n = 32; n <= max_nodes; n *= 2) {
    BigFloat cur = integrate_fixed(f, a, b, n);
    if ((cur - prev).abs() < tol) return cur;
    prev = cur;
  }
  throw std::runtime_error("integrate_adaptive: node budget exhausted before convergence");
}

}  // namespace efp
