#include "efp/bareiss.hpp"

#include <stdexcept>

namespace efp {

namespace {

// Dense integer polynomial, ascending powers, trailing zeros trimmed.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  ztrim(r);
  return r;
}

// num / den in Z[x]; Bareiss guarantees divisibility, but we verify and
// fail hard if the invariant is ever broken.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  if (den.empty()) throw std::domain_error("bareiss: division by zero polynomial");
  ZPoly quot;
  if (num.empty()) return quot;
  if (num.size() < den.size()) throw std::domain_error("bareiss: non-exact division");
  quot.assign(num.size() - den.size() + 1, Int(0));
  const Int& lead = den.back();
  for (size_t k = quot.size(); k-- > 0;) {
    if (num.size() < den.size() + k) continue;
    Int& top = num[den.size() - 1 + k];
    if (top.is_zero()) continue;
    Int q = Int::div_exact(top, lead);
    for (size_t i = 0; i < den.size(); ++i) num[i + k] -= q * den[i];
    quot[k] = std::move(q);
    ztrim(num);
  }
  if (!num.empty()) throw std::domain_error("bareiss: non-exact division");
  return quot;
}

// One-step Bareiss elimination; returns det(m) of the scaled integer matrix.
ZPoly zdet(std::vector<std::vector<ZPoly>>& m) {
  const size_t n = m.size();
  int sign = 1;
  ZPoly prev{Int(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].empty()) ++swap_row;
      if (swap_row == n) return {};  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        ZPoly t = zsub(zmul(m[k][k], m[i][j]), zmul(m[i][k], m[k][j]));
        m[i][j] = zdiv_exact(std::move(t), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  ZPoly det = std::move(m[n - 1][n - 1]);
  if (sign < 0)
    for (auto& c : det) c = -c;
  return det;
}

}  // namespace

Poly det_bareiss(const std::vector<std::vector<Poly>>& m) {
  const size_t n = m.size();
  if (n == 0) return Poly(Rational(1));  // empty matrix: det = 1
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss: matrix not square");

  Int scale(1);
  for (const auto& row : m)
    for (const auto& e : row)
      for (const auto& c : e.coeffs())
        if (!c.is_zero()) scale = Int::lcm(scale, c.den());

  std::vector<std::vector<ZPoly>> zm(n, std::vector<ZPoly>(n));
  Rational rscale(scale);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& cs = m[i][j].coeffs();
      ZPoly e(cs.size());
      for (size_t t = 0; t < cs.size(); ++t) e[t] = (cs[t] * rscale).num();
      zm[i][j] = std::move(e);
    }

  ZPoly d = zdet(zm);
  Rational unscale = Rational::pow(rscale, static_cast<long>(n)).inverse();
  Poly out;
  for (size_t t = 0; t < d.size(); ++t)
    out += Poly::monomial(static_cast<long>(t), Rational(d[t]) * unscale);
  return out;
}

Rational det_bareiss(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<Poly>> pm(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) pm[i].push_back(Poly(e));
  Poly d = det_bareiss(pm);
  return d.eval(Rational(0));
}

}  // namespace efp
