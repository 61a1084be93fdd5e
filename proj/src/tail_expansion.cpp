#include "efp/tail_expansion.hpp"

namespace efp {

TailExpansion::Value TailExpansion::eval(long s) const {
  const mpfr_prec_t prec = rate.prec();
  BigFloat sf(s, prec);
  BigFloat out = -(sf.pow_si(rate_power)) * rate + BigFloat(log_coeff, prec) * sf.log() +
                 constant;
  for (const auto& [power, coeff] : corrections) out += coeff / sf.pow_si(power);
  return {out, error_order};
}

}  // namespace efp
