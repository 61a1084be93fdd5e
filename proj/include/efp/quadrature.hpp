#pragma once

#include <functional>
#include <vector>

#include "efp/bigfloat.hpp"

namespace efp {

// Gauss-Legendre nodes and weights on [-1, 1] at the requested precision.
// Nodes are found by Newton iteration on P_n, seeded with the Chebyshev
// approximation; results are cached per (n, prec). Thread-safe.
struct GaussLegendre {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};
const GaussLegendre& gauss_legendre(long n, mpfr_prec_t prec);

// Integral of f over [a, b] with an n-point Gauss-Legendre rule.
BigFloat integrate_fixed(const std::function<BigFloat(const BigFloat&)>& f,
                         const BigFloat& a, const BigFloat& b, long n);

// Doubles the node count until two successive results agree to tol (or the
// node budget is exhausted, which throws).
BigFloat integrate_adaptive(const std::function<BigFloat(const BigFloat&)>& f,
                            const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                            long max_nodes = 4096);

}  // namespace efp
