#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "formula_eval.hpp"
#include "qlat/bounds.hpp"

using namespace qlat;

namespace {

void check_formula(const BoundReport& r) {
  CAPTURE(r.theorem);
  CAPTURE(r.formula);
  CHECK(formula::eval(r.formula, r.q) == r.value);
}

}  // namespace

TEST_CASE("optimal union bound values") {
  CHECK(optimal_union_bound(3, 2, 2).value == 8);
  CHECK(optimal_union_bound(4, 2, 2).value == 16);
  CHECK(optimal_union_bound(4, 3, 2).value == 23);
  CHECK(optimal_union_bound(6, 3, 2).value == 95);
  CHECK(optimal_union_bound(3, 2, 2).hypothesis_ok == false);  // s = n - 1
  CHECK(optimal_union_bound(4, 2, 2).hypothesis_ok == true);
  CHECK_THROWS_AS(optimal_union_bound(3, 3, 2), BadParameters);
  CHECK_THROWS_AS(optimal_union_bound(4, 1, 2), BadParameters);
}

TEST_CASE("suboptimal union bound values and hypotheses") {
  CHECK(suboptimal_union_bound(4, 2, 2).value == 5);
  CHECK(suboptimal_union_bound(6, 3, 2).value == 71);
  CHECK(suboptimal_union_bound(6, 4, 2).value == 268);
  CHECK(suboptimal_union_bound(6, 3, 2).hypothesis_ok == true);   // n = 2d+4
  CHECK(suboptimal_union_bound(5, 3, 2).hypothesis_ok == false);  // q=2, n=2d+3
  CHECK(suboptimal_union_bound(5, 3, 3).hypothesis_ok == true);
}

TEST_CASE("antichain bounds") {
  CHECK(antichain_bound(4, 4, 2).value == 35);
  CHECK(antichain_bound(4, 4, 2).theorem == "1.5");
  CHECK(antichain_bound(4, 2, 2).value == 15);
  CHECK(antichain_bound(4, 2, 2).theorem == "1.4");
  CHECK(antichain_bound(5, 4, 2).value == 155);
}

TEST_CASE("suboptimal antichain bounds") {
  auto even = suboptimal_antichain_bound(4, 2, 2);
  CHECK(even.value == 13);
  CHECK(even.theorem == "1.6");
  CHECK(!even.conjectural);

  auto top = suboptimal_antichain_bound(4, 4, 2);
  CHECK(top.value == 29);
  CHECK(top.theorem == "1.5");
  CHECK(!top.conjectural);

  auto odd = suboptimal_antichain_bound(6, 3, 2);
  CHECK(odd.theorem == "conj5.1");
  CHECK(odd.conjectural);
  CHECK(odd.value == gaussian_binomial(6, 1, 2) - 2);

  auto deep = suboptimal_antichain_bound(6, 4, 2);
  CHECK(deep.theorem == "1.6");
  CHECK(deep.value == gaussian_binomial(6, 2, 2) - 2 * gaussian_binomial(4, 1, 2));
}

TEST_CASE("EKR bound case split") {
  auto wide = ekr_bound(4, 2, 1, 2);
  CHECK(wide.value == 7);
  CHECK(wide.branch == "n>=2k");
  auto narrow = ekr_bound(5, 3, 2, 2);
  CHECK(narrow.branch == "2k-t<n<=2k");
  CHECK(narrow.value == gaussian_binomial(4, 3, 2));
  CHECK_THROWS_AS(ekr_bound(3, 2, 1, 2), BadParameters);  // n = 2k - t
  CHECK_THROWS_AS(ekr_bound(4, 2, 3, 2), BadParameters);  // t > k
}

TEST_CASE("Hilton-Milner bound") {
  CHECK(hm_bound(6, 2, 2).value == 7);
  CHECK(hm_bound(7, 2, 2).value == 7);
  CHECK(hm_bound(5, 2, 3).value ==
        gaussian_binomial(4, 1, 3) - 9 * gaussian_binomial(2, 1, 3) + 9);
  CHECK_THROWS_AS(hm_bound(5, 2, 2), HypothesisViolated);  // q=2 needs n >= 2k+2
  CHECK_THROWS_AS(hm_bound(6, 1, 2), HypothesisViolated);  // k >= 2
}

TEST_CASE("cross bounds") {
  CHECK(cross_t_bound(6, 2, 3, 1, 2).value == 436);
  CHECK_THROWS_AS(cross_t_bound(4, 2, 3, 1, 2), HypothesisViolated);  // a+b >= n+t

  CHECK(cross_sperner_bound(5, 2, 3, 2).value == 149);
  CHECK(cross_sperner_bound(4, 1, 3, 2).value == 9);
  CHECK(cross_sperner_bound(4, 1, 3, 2).branch == "b-side");
  CHECK_THROWS_AS(cross_sperner_bound(4, 2, 2, 2), BadParameters);

  CHECK(cross_sharp_bound(4, 1, 2).value == 4);
  CHECK(cross_sharp_bound(5, 2, 2).value == 92);
  CHECK(cross_sharp_bound(4, 1, 2).hypothesis_ok == true);   // n = 2k+2
  CHECK(cross_sharp_bound(3, 1, 2).hypothesis_ok == false);  // n = 2k+1
  CHECK_THROWS_AS(cross_sharp_bound(2, 1, 2), BadParameters);
}

TEST_CASE("an independent parser re-derives every value from the formula") {
  check_formula(optimal_union_bound(4, 2, 2));
  check_formula(optimal_union_bound(5, 3, 2));
  check_formula(optimal_union_bound(6, 3, 3));
  check_formula(suboptimal_union_bound(4, 2, 2));
  check_formula(suboptimal_union_bound(6, 3, 2));
  check_formula(suboptimal_union_bound(6, 4, 5));
  check_formula(antichain_bound(4, 4, 2));
  check_formula(antichain_bound(5, 2, 3));
  check_formula(suboptimal_antichain_bound(4, 2, 2));
  check_formula(suboptimal_antichain_bound(4, 4, 2));
  check_formula(suboptimal_antichain_bound(6, 4, 3));
  check_formula(suboptimal_antichain_bound(7, 5, 2));
  check_formula(ekr_bound(6, 2, 1, 2));
  check_formula(ekr_bound(5, 3, 2, 3));
  check_formula(hm_bound(6, 2, 2));
  check_formula(hm_bound(7, 3, 3));
  check_formula(cross_t_bound(6, 2, 3, 1, 2));
  check_formula(cross_t_bound(8, 3, 3, 2, 2));
  check_formula(cross_sperner_bound(5, 2, 3, 2));
  check_formula(cross_sperner_bound(4, 1, 3, 2));
  check_formula(cross_sharp_bound(5, 2, 2));
  check_formula(cross_sharp_bound(7, 2, 4));
}

TEST_CASE("reports carry their parameters") {
  auto r = suboptimal_union_bound(6, 4, 2);
  CHECK(r.theorem == "1.3");
  CHECK(r.params.at("n") == 6);
  CHECK(r.params.at("s") == 4);
  CHECK(r.q == 2);
}
