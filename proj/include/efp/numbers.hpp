#pragma once

#include "efp/rational.hpp"

namespace efp {

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Rational binomial(long n, long k);

Rational factorial(long n);

// Bernoulli number B_n with the convention B_1 = -1/2 (so B_{2k+1} = 0 for
// k >= 1). Values are cached; thread-safe.
Rational bernoulli(long n);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), exact.
Rational pochhammer(const Rational& a, long k);

}  // namespace efp
