#include "efp/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace efp {

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Rational(0);
  return Rational(Int::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
  return Rational(Int::factorial(static_cast<unsigned long>(n)));
}

// Defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, n >= 1, solved for B_n.
Rational bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli: n must be nonnegative");
  static std::vector<Rational> table = {Rational(1)};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    Rational sum(0);
    for (long k = 0; k < m; ++k) sum += binomial(m + 1, k) * table[k];
    table.push_back(-sum / Rational(m + 1));
  }
  return table[n];
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::domain_error("pochhammer: k must be nonnegative");
  Rational prod(1);
  Rational term = a;
  for (long i = 0; i < k; ++i) {
    prod *= term;
    term += Rational(1);
  }
  return prod;
}

}  // namespace efp
