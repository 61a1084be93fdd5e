#pragma once

#include <vector>

#include "efp/polynomial.hpp"

namespace efp {

// Exact determinants via fraction-free (Bareiss) elimination. Entries are
// scaled to a common integer form first, so all intermediate divisions stay
// in Z respectively Z[x]; every division is checked exact.
Poly det_bareiss(const std::vector<std::vector<Poly>>& m);
Rational det_bareiss(const std::vector<std::vector<Rational>>& m);

}  // namespace efp
