#pragma once

#include "efp/bigfloat.hpp"

namespace efp {

// Shared transcendental constants, cached per precision. Thread-safe.
BigFloat const_pi(mpfr_prec_t prec);
BigFloat const_log_2pi(mpfr_prec_t prec);

// zeta'(-1) = -0.16542114370045092921391966024278064276... Computed by
// high-order central differencing of mpfr's zeta at a working precision
// well above `prec`, so the value is correct to the full requested
// precision and does not depend on any asymptotic series used elsewhere
// in this library.
BigFloat zeta_prime_minus1(mpfr_prec_t prec);

}  // namespace efp
