#pragma once

#include <vector>

#include "efp/bigfloat.hpp"
#include "efp/params.hpp"

namespace efp {

// A truncated tail expansion
//   -rate * s^rate_power + log_coeff * log s + constant
//     + sum_k coeff_k s^(-k)
// together with the order of the first omitted term. Disordered tails decay
// like exp(-rate s^2) with half-integer-free even corrections; ordered
// tails describe log(1 - F) with rate * s and every inverse power.
struct TailExpansion {
  Regime regime = Regime::disordered;
  int rate_power = 2;
  BigFloat rate;
  Rational log_coeff;
  BigFloat constant;
  std::vector<std::pair<long, BigFloat>> corrections;  // (inverse power, coefficient)
  long error_order = 0;  // first omitted inverse power of s

  struct Value {
    BigFloat value;
    long error_order;
  };
  Value eval(long s) const;
};

// Expansion of log F_{r,s,0} in the disordered regime through s^(-2*order).
TailExpansion disordered_expansion(const Rational& v, const Rational& alpha, int order,
                                   mpfr_prec_t prec = kDefaultPrec);

// Expansion of log(1 - F_{r,s,0}) in the ordered regime through s^(-order).
TailExpansion ordered_expansion(const Rational& v, const Rational& alpha, int order,
                                mpfr_prec_t prec = kDefaultPrec);

}  // namespace efp
