#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qlat/errors.hpp"

namespace qlat {

/// Arbitrary-precision nonnegative integer used for all exact counts.
using BigNat = boost::multiprecision::cpp_int;

BigNat q_power(unsigned q, unsigned long long e);

/// Gaussian binomial coefficient [m, k]_q. Zero when m < k, one when k = 0.
BigNat gaussian_binomial(long long m, long long k, unsigned q);

/// Product formula evaluated over the reals; agrees with the exact value at
/// integer m and is strictly increasing in m for m >= k.
double gaussian_binomial_real(double m, long long k, unsigned q);

/// The unique real m >= k with [m, k]_q = size, by monotone bisection.
double solve_gaussian_m(const BigNat& size, long long k, unsigned q);

/// Number of l-subspaces W of an n-space with dim(Z cap W) = 0 for a fixed
/// m-subspace Z: q^{lm} [n-m, l]_q.
BigNat disjoint_count(unsigned n, unsigned m, unsigned l, unsigned q);

/// Same count by the q-analog inclusion-exclusion sum; independent route
/// kept as a cross-check against disjoint_count.
BigNat disjoint_count_inclusion_exclusion(unsigned n, unsigned m, unsigned l,
                                          unsigned q);

}  // namespace qlat
