#pragma once

#include <vector>

#include "efp/params.hpp"
#include "efp/polynomial.hpp"

namespace efp {

// The polynomial E entering the integrable kernel: degree s+q, with
// coefficient of lambda^k equal to the coefficient of nu^k in the expansion
// of (nu-1)^(r+q) nu^s / (nu-alpha)^r around nu = infinity. Exact.
Poly kernel_poly(const EfpParams& p, const Rational& alpha);

// Kernel data for det(1 - K) = F_{r,s,q}. The kernel actually discretized
// is the conjugation-equivalent single-valued form
//   K(lambda, mu) = (E(lambda) - E(mu))/(lambda - mu) * w(mu) / (2 pi i),
// where w(mu) = (mu-alpha)^r / ((mu-1)^(r+q) mu^s) has integer powers only.
struct KernelData {
  EfpParams params;
  Rational alpha;
  Poly E;

  KernelData(const EfpParams& p, const Rational& a)
      : params(p), alpha(a), E(kernel_poly(p, a)) {}
};

// Quadrature nodes lambda_j = radius * exp(2 pi i j / m) with the trapezoid
// rule, spectrally accurate for analytic integrands on the circle. The
// radius must keep alpha and 1 outside the contour.
struct ContourGrid {
  Rational radius;
  long m;
  mpfr_prec_t prec;
  std::vector<BComplex> nodes;

  ContourGrid(const Rational& radius_, long m_, mpfr_prec_t prec_ = kDefaultPrec);
};

// Divided difference (E(x) - E(y))/(x - y), evaluated by a bivariate Horner
// scheme that has no removable singularity: the diagonal returns E'(x).
BComplex divided_difference(const Poly& E, const BComplex& x, const BComplex& y);

// Weight w(lambda) at a grid point.
BComplex kernel_weight(const KernelData& kd, const BComplex& lambda, mpfr_prec_t prec);

// Kernel value K(lambda, mu) including the 1/(2 pi i).
BComplex kernel_value(const KernelData& kd, const BComplex& lambda, const BComplex& mu,
                      mpfr_prec_t prec);

// Nystrom matrix A_{jk} = K(lambda_j, lambda_k) * (2 pi i lambda_k / m);
// the 2 pi i cancels against the kernel prefactor.
std::vector<std::vector<BComplex>> nystrom_matrix(const KernelData& kd,
                                                  const ContourGrid& grid);

// det(I - A) by complex LU with partial pivoting.
BComplex det_one_minus(std::vector<std::vector<BComplex>> a);

// F_{r,s,q} = det(1 - K) by Nystrom discretization. The imaginary part of
// the returned value should sit at quadrature-noise level; callers treat a
// large one as a misconfigured contour.
BComplex fredholm_det_nystrom(const KernelData& kd, const ContourGrid& grid);

// Tr K by quadrature of the kernel diagonal.
BComplex trace_k_quadrature(const KernelData& kd, const ContourGrid& grid);

// Tr K exactly, as a polynomial in alpha, by double series-coefficient
// extraction. The trace is alpha^(r-s+1) (-1)^q sum_{j} (j+1) alpha^j A_j B_j
// with A_j, B_j finite binomial convolutions, hence a polynomial; it
// vanishes identically for s = 0.
Poly trace_k_polynomial(const EfpParams& p);

// The same, truncated at total alpha-order `order`. Throws when the order
// is below r-s+1 (everything would be cut).
Poly trace_k_series(const EfpParams& p, long order);

// Exact value of Tr K at a rational alpha.
Rational trace_k_value(const EfpParams& p, const Rational& alpha);

}  // namespace efp
