#include "qlat/qbinom.hpp"

#include <cmath>

namespace qlat {

BigNat q_power(unsigned q, unsigned long long e) {
  BigNat r = 1;
  BigNat base = q;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigNat gaussian_binomial(long long m, long long k, unsigned q) {
  if (m < 0 || k < 0) throw NegativeArgument("gaussian binomial arguments must be nonnegative");
  if (m < k) return 0;
  BigNat num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= q_power(q, (unsigned long long)(m - i)) - 1;
    den *= q_power(q, (unsigned long long)(k - i)) - 1;
  }
  return num / den;  // exact
}

double gaussian_binomial_real(double m, long long k, unsigned q) {
  if (k < 0) throw NegativeArgument("k must be nonnegative");
  double r = 1.0;
  for (long long i = 0; i < k; ++i)
    r *= (std::pow(double(q), m - double(i)) - 1.0) /
         (std::pow(double(q), double(k - i)) - 1.0);
  return r;
}

double solve_gaussian_m(const BigNat& size, long long k, unsigned q) {
  if (size < 1) throw SizeZero("size must be at least 1");
  if (size == 1) return double(k);
  double target = size.convert_to<double>();
  double lo = double(k), hi = double(k) + 1.0;
  while (gaussian_binomial_real(hi, k, q) < target) {
    lo = hi;
    hi = double(k) + 2.0 * (hi - double(k));
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    if (gaussian_binomial_real(mid, k, q) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

BigNat disjoint_count(unsigned n, unsigned m, unsigned l, unsigned q) {
  if (m + l > n) throw DimensionOverflow("need m + l <= n");
  return q_power(q, (unsigned long long)l * m) * gaussian_binomial(n - m, l, q);
}

BigNat disjoint_count_inclusion_exclusion(unsigned n, unsigned m, unsigned l,
                                          unsigned q) {
  if (m + l > n) throw DimensionOverflow("need m + l <= n");
  BigNat x = 0;
  unsigned tmax = std::min(m, l);
  for (unsigned t = 0; t <= tmax; ++t) {
    BigNat term = q_power(q, (unsigned long long)t * (t - 1) / 2) *
                  gaussian_binomial(m, t, q) * gaussian_binomial(n - t, l - t, q);
    if (t % 2 == 0)
      x += term;
    else
      x -= term;
  }
  return x;
}

}  // namespace qlat
