#include "efp/params.hpp"

#include <stdexcept>

namespace efp {

EfpParams::EfpParams(long r_, long s_, long q_) : r(r_), s(s_), q(q_) {
  if (r < 1) throw std::domain_error("EfpParams: r must be positive");
  if (s < 0 || q < 0) throw std::domain_error("EfpParams: s and q must be nonnegative");
}

Rational EfpParams::beta() const {
  Rational ratio = Rational(r - s, r + s);
  return ratio * ratio;
}

Geometry::Geometry(const Rational& alpha_, const Rational& v_, mpfr_prec_t prec)
    : Geometry(BigFloat(alpha_, prec), BigFloat(v_, prec)) {}

Geometry::Geometry(const BigFloat& alpha_, const BigFloat& v_)
    : alpha(alpha_), v(v_), u(alpha_.prec()), beta(alpha_.prec()) {
  if (!(alpha > BigFloat(0, alpha.prec())) || !(alpha < BigFloat(1, alpha.prec())))
    throw std::domain_error("Geometry: alpha must lie in (0,1)");
  BigFloat root = alpha.sqrt();
  u = (1 - root) / (1 + root);
  BigFloat ratio = (1 - v) / (1 + v);
  beta = ratio * ratio;
}

Regime Geometry::regime() const {
  if (v > u) return Regime::disordered;
  if (v < u) return Regime::ordered;
  return Regime::boundary;
}

}  // namespace efp
