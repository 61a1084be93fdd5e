#include "efp/constants.hpp"

#include <map>
#include <mutex>

namespace efp {

namespace {

std::mutex g_cache_mutex;

BigFloat cached(int which, mpfr_prec_t prec, BigFloat (*compute)(mpfr_prec_t)) {
  static std::map<std::pair<int, mpfr_prec_t>, BigFloat> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(which, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigFloat v = compute(prec);
  cache.emplace(key, v);
  return v;
}

BigFloat compute_pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat compute_log_2pi(mpfr_prec_t prec) {
  BigFloat two_pi = 2 * compute_pi(prec + 8);
  BigFloat r(prec);
  mpfr_log(r.raw(), two_pi.raw(), MPFR_RNDN);
  return r;
}

// Central difference (zeta(-1+h) - zeta(-1-h)) / 2h. Truncation error is
// h^2 * |zeta'''| / 6 = O(2^-(prec+40)); rounding error at working
// precision 2*prec+64 stays far below that.
BigFloat compute_zeta_prime_minus1(mpfr_prec_t prec) {
  const mpfr_prec_t wp = 2 * prec + 64;
  const long hexp = -(static_cast<long>(prec) + 40) / 2 - 1;

  mpfr_t h, x, zp, zm;
  mpfr_inits2(wp, h, x, zp, zm, nullptr);
  mpfr_set_ui_2exp(h, 1, hexp, MPFR_RNDN);

  mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_add(x, x, h, MPFR_RNDN);
  mpfr_zeta(zp, x, MPFR_RNDN);

  mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_sub(x, x, h, MPFR_RNDN);
  mpfr_zeta(zm, x, MPFR_RNDN);

  mpfr_sub(zp, zp, zm, MPFR_RNDN);
  mpfr_div(zp, zp, h, MPFR_RNDN);
  mpfr_div_ui(zp, zp, 2, MPFR_RNDN);

  BigFloat r(prec);
  mpfr_set(r.raw(), zp, MPFR_RNDN);
  mpfr_clears(h, x, zp, zm, nullptr);
  return r;
}

}  // namespace

BigFloat const_pi(mpfr_prec_t prec) { return cached(0, prec, compute_pi); }
BigFloat const_log_2pi(mpfr_prec_t prec) { return cached(1, prec, compute_log_2pi); }
BigFloat zeta_prime_minus1(mpfr_prec_t prec) {
  return cached(2, prec, compute_zeta_prime_minus1);
}

}  // namespace efp
