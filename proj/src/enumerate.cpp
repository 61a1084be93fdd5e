#include <map>
#include <stdexcept>
#include <utility>

#include "efp/efp_exact.hpp"

namespace efp {

namespace {

// Edge states: horizontal edges carry 1 if the arrow points right, vertical
// edges 1 if it points up. Around a vertex (hl, hr, vt, vb) the six ice-rule
// types are
//   t1 (1,1,1,1)  t2 (0,0,0,0)   weight sqrt(1-alpha)
//   t3 (1,1,0,0)  t4 (0,0,1,1)   weight sqrt(alpha)
//   t5 (1,0,1,0)  t6 (0,1,0,1)   weight 1
// Domain-wall boundaries: top/bottom vertical edges point into the lattice
// (vt = 0 on top, vb = 1 on bottom), horizontal boundary edges point out of
// it (hl = 0 on the left, hr = 1 on the right).
struct LatticeCounter {
  long n;
  long rows_frozen;  // type-2 region: rows 0..rows_frozen-1
  long cols_frozen;  // columns 0..cols_frozen-1
  bool restrict_region;
  // exponent pair (count of type-1/2 vertices, count of type-3/4) -> #configs
  std::map<std::pair<long, long>, long> groups;
  std::vector<int> vt;  // state of the vertical edge above the current row

  void run() {
    vt.assign(n, 0);
    walk(0, 0, 0, 0, 0);
  }

  void walk(long row, long col, int hl, long e1, long e3) {
    if (col == n) {
      if (hl != 1) return;  // right boundary must point right
      if (row + 1 == n) {
        for (int s : vt)
          if (s != 1) return;  // bottom boundary must point up
        ++groups[{e1, e3}];
        return;
      }
      walk(row + 1, 0, 0, e1, e3);
      return;
    }
    const int t = vt[col];
    const bool frozen = restrict_region && row < rows_frozen && col < cols_frozen;
    if (hl == 1 && t == 1) {
      if (frozen) return;
      step(row, col, 1, 1, e1 + 1, e3);  // t1
      step(row, col, 0, 0, e1, e3);      // t5
    } else if (hl == 0 && t == 0) {
      step(row, col, 0, 0, e1 + 1, e3);  // t2 (the frozen type)
      if (!frozen) step(row, col, 1, 1, e1, e3);  // t6
    } else if (hl == 1 && t == 0) {
      if (frozen) return;
      step(row, col, 1, 0, e1, e3 + 1);  // t3
    } else {
      if (frozen) return;
      step(row, col, 0, 1, e1, e3 + 1);  // t4
    }
  }

  void step(long row, long col, int hr, int vb, long e1, long e3) {
    int saved = vt[col];
    vt[col] = vb;
    walk(row, col + 1, hr, e1, e3);
    vt[col] = saved;
  }
};

struct GroupSum {
  bool exact = true;
  Rational value;
  BigFloat approx;
};

GroupSum weighted_sum(const std::map<std::pair<long, long>, long>& groups,
                      const Rational& alpha, mpfr_prec_t prec) {
  GroupSum out;
  out.approx = BigFloat(0, prec);
  Rational one_minus = Rational(1) - alpha;
  for (const auto& [exps, count] : groups) {
    auto [e1, e3] = exps;
    if (e1 % 2 == 0 && e3 % 2 == 0) {
      out.value += Rational(count) * Rational::pow(one_minus, e1 / 2) *
                   Rational::pow(alpha, e3 / 2);
    } else {
      out.exact = false;
    }
    BigFloat w = BigFloat(one_minus, prec).sqrt().pow_si(e1) *
                 BigFloat(alpha, prec).sqrt().pow_si(e3);
    out.approx += BigFloat(count, prec) * w;
  }
  return out;
}

}  // namespace

EnumValue efp_enumerate(const EfpParams& p, const Rational& alpha, mpfr_prec_t prec) {
  const long n = p.n();
  if (n > 6)
    throw std::domain_error(
        "efp_enumerate: refusing N = r+s+q > 6 (state space grows as 2^(O(N^2)))");
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::domain_error("efp_enumerate: alpha must lie in [0,1]");

  EnumValue out;
  out.prec = prec;
  if (p.s > p.r) {
    out.value = Rational(0);
    out.approx = BigFloat(0, prec);
    return out;
  }
  if (p.s == 0) {
    out.value = Rational(1);
    out.approx = BigFloat(1, prec);
    return out;
  }

  LatticeCounter z{n, p.s, p.s + p.q, false, {}, {}};
  z.run();
  LatticeCounter zr{n, p.s, p.s + p.q, true, {}, {}};
  zr.run();

  GroupSum total = weighted_sum(z.groups, alpha, prec);
  GroupSum part = weighted_sum(zr.groups, alpha, prec);
  out.exact = total.exact && part.exact;
  if (out.exact) out.value = part.value / total.value;
  out.approx = part.approx / total.approx;
  return out;
}

}  // namespace efp
