#include "efp/bigfloat.hpp"

#include <cstdlib>
#include <ostream>

namespace efp {

std::string BigFloat::str(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(f_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, f_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (m[0] == '-') {
    sign_part = "-";
    m = m.substr(1);
  }
  // strip trailing zeros of the mantissa
  size_t last = m.find_last_not_of('0');
  m = m.substr(0, std::max<size_t>(last + 1, 1));
  return sign_part + "0." + m + "e" + std::to_string(e);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace efp
