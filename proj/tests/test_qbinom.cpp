#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qlat/qbinom.hpp"

using namespace qlat;

TEST_CASE("known Gaussian binomial values") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(6, 2, 2) == 651);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(2, 1, 5) == 6);
}

TEST_CASE("edge cases and errors") {
  CHECK(gaussian_binomial(5, 0, 2) == 1);
  CHECK(gaussian_binomial(0, 0, 2) == 1);
  CHECK(gaussian_binomial(2, 3, 2) == 0);
  CHECK_THROWS_AS(gaussian_binomial(-1, 0, 2), NegativeArgument);
  CHECK_THROWS_AS(gaussian_binomial(3, -2, 2), NegativeArgument);
}

TEST_CASE("Pascal identity and symmetry across the grid") {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (long long n = 0; n <= 12; ++n)
      for (long long k = 0; k <= n; ++k) {
        BigNat v = gaussian_binomial(n, k, q);
        CHECK(v == gaussian_binomial(n, n - k, q));
        if (n >= 1 && k >= 1)
          CHECK(v == q_power(q, (unsigned long long)(n - k)) *
                             gaussian_binomial(n - 1, k - 1, q) +
                         gaussian_binomial(n - 1, k, q));
      }
}

TEST_CASE("real-valued product formula matches at integer m") {
  for (unsigned q : {2u, 3u})
    for (long long m = 1; m <= 8; ++m)
      for (long long k = 1; k <= m; ++k) {
        double exact = gaussian_binomial(m, k, q).convert_to<double>();
        CHECK(gaussian_binomial_real((double)m, k, q) ==
              doctest::Approx(exact).epsilon(1e-9));
      }
}

TEST_CASE("real-valued formula is increasing in m") {
  CHECK(gaussian_binomial_real(4.0, 2, 2) < gaussian_binomial_real(4.5, 2, 2));
  CHECK(gaussian_binomial_real(4.5, 2, 2) < gaussian_binomial_real(5.0, 2, 2));
}

TEST_CASE("solve_gaussian_m inverts the product formula") {
  for (unsigned q : {2u, 3u})
    for (long long m = 1; m <= 8; ++m)
      for (long long k = 1; k <= m; ++k) {
        double sol = solve_gaussian_m(gaussian_binomial(m, k, q), k, q);
        CHECK(sol == doctest::Approx((double)m).epsilon(1e-8));
      }
  CHECK(solve_gaussian_m(BigNat(1), 2, 2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(solve_gaussian_m(BigNat(0), 2, 2), SizeZero);
}

TEST_CASE("disjoint-space counts agree between both closed forms") {
  CHECK(disjoint_count(4, 2, 2, 2) == 16);
  for (unsigned q : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n)
      for (unsigned m = 0; m <= n; ++m)
        for (unsigned l = 1; l + m <= n; ++l)
          CHECK(disjoint_count(n, m, l, q) ==
                disjoint_count_inclusion_exclusion(n, m, l, q));
}
