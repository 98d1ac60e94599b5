#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlat/bounds.hpp"
#include "qlat/families.hpp"

using namespace qlat;

namespace {

bool family_subset(const Family& a, const Family& b) {
  for (const auto& m : a.members())
    if (!b.has(m)) return false;
  return true;
}

}  // namespace

TEST_CASE("K family sizes match the optimal bound") {
  const Field& f = Field::get(2);
  CHECK(build_K(f, 3, 2).size() == 8);
  CHECK(build_K(f, 4, 2).size() == 16);
  CHECK(build_K(f, 4, 3).size() == 23);
  CHECK(build_K(f, 6, 3).size() == 95);
  for (unsigned n = 3; n <= 5; ++n)
    for (unsigned s = 2; s < n; ++s)
      CHECK(BigNat(build_K(f, n, s).size()) == optimal_union_bound(n, s, 2).value);
  const Field& f3 = Field::get(3);
  CHECK(BigNat(build_K(f3, 4, 3).size()) == optimal_union_bound(4, 3, 3).value);
}

TEST_CASE("K families are s-union") {
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q);
    for (unsigned n = 3; n <= 4; ++n)
      for (unsigned s = 2; s < n; ++s) CHECK(is_s_union(build_K(f, n, s), s));
  }
}

TEST_CASE("T family sizes match the suboptimal bound") {
  const Field& f = Field::get(2);
  CHECK(build_T(f, 4, 2).size() == 5);
  CHECK(build_T(f, 6, 3).size() == 71);
  CHECK(build_T(f, 6, 4).size() == 268);
  CHECK(BigNat(build_T(f, 5, 2).size()) == suboptimal_union_bound(5, 2, 2).value);
  const Field& f3 = Field::get(3);
  CHECK(BigNat(build_T(f3, 4, 2).size()) == suboptimal_union_bound(4, 2, 3).value);
  CHECK(BigNat(build_T(f3, 5, 3).size()) == suboptimal_union_bound(5, 3, 3).value);
}

TEST_CASE("T families are s-union and escape every optimal family") {
  const Field& f = Field::get(2);
  for (unsigned s : {2u, 3u}) {
    Family t = build_T(f, 5, s);
    CHECK(is_s_union(t, s));
    if (s % 2 == 0) {
      CHECK(!family_subset(t, build_K(f, 5, s)));
    } else {
      for (const auto& e : all_subspaces(f, 5, 1))
        CHECK(!family_subset(t, build_K(f, 5, s, e)));
    }
  }
}

TEST_CASE("J family is 5-union and escapes every optimal family") {
  const Field& f = Field::get(2);
  Family j = build_J(f, 6);
  CHECK(is_s_union(j, 5));
  for (const auto& e : all_subspaces(f, 6, 1))
    CHECK(!family_subset(j, build_K(f, 6, 5, e)));
  CHECK_THROWS_AS(build_J(f, 5), BadParameters);
}

TEST_CASE("A and B antichain sizes") {
  const Field& f = Field::get(2);
  CHECK(build_A(f, 4, 4).size() == 29);
  CHECK(build_A(f, 5, 4).size() == 141);
  CHECK(build_B(f, 3, 2).size() == 5);
  CHECK(build_B(f, 4, 3).size() == 13);
  CHECK(build_B(f, 4, 2).size() == 13);
  CHECK(BigNat(build_A(f, 4, 4).size()) ==
        suboptimal_antichain_bound(4, 4, 2).value);
  CHECK(BigNat(build_B(f, 4, 4).size()) ==
        suboptimal_antichain_bound(4, 4, 2).value);
  CHECK(BigNat(build_B(f, 4, 3).size()) ==
        suboptimal_antichain_bound(4, 3, 2).value);
  CHECK(BigNat(build_B(f, 4, 2).size()) ==
        suboptimal_antichain_bound(4, 2, 2).value);
}

TEST_CASE("A and B are antichains with the s-union property") {
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q);
    // A[n,s] needs even s (or s = n) for the union property
    for (unsigned n : {4u, 5u}) {
      Family a = build_A(f, n, 4);
      CHECK(is_antichain(a));
      CHECK(is_s_union(a, 4));
    }
    for (unsigned s : {2u, 3u, 4u}) {
      Family b = build_B(f, 4, s);
      CHECK(is_antichain(b));
    }
    // B[n,s] is s-union for odd s and for s = n; B[n,2] coincides with B[n,3]
    // and is only 3-union (the anchor plane spans a solid with outside lines)
    CHECK(is_s_union(build_B(f, 4, 3), 3));
    CHECK(is_s_union(build_B(f, 4, 4), 4));
    CHECK(build_B(f, 4, 2) == build_B(f, 4, 3));
    CHECK(!is_s_union(build_B(f, 4, 2), 2));
    CHECK(is_s_union(build_B(f, 4, 2), 3));
  }
}

TEST_CASE("B escapes the optimal antichains") {
  const Field& f = Field::get(2);
  // s = 2: the only optimal antichain is the line layer
  CHECK(!family_subset(build_B(f, 4, 2), full_layer(f, 4, 1)));
  // s = n = 4: the middle layer
  CHECK(!family_subset(build_B(f, 4, 4), full_layer(f, 4, 2)));
  CHECK(!family_subset(build_A(f, 4, 4), full_layer(f, 4, 2)));
}

TEST_CASE("anchors select the family and are validated") {
  const Field& f = Field::get(2);
  auto planes = all_subspaces(f, 4, 2);
  CHECK(build_T(f, 4, 2, {}, planes[0]) != build_T(f, 4, 2, {}, planes[1]));
  CHECK(build_T(f, 4, 2, {}, planes[3]).has(planes[3]));

  auto lines = all_subspaces(f, 4, 1);
  CHECK_THROWS_AS(build_K(f, 4, 2, lines[0]), BadAnchor);      // even s, no anchor
  CHECK_THROWS_AS(build_K(f, 4, 3, planes[0]), BadAnchor);     // wrong dimension
  CHECK_THROWS_AS(build_T(f, 4, 2, lines[0], {}), BadAnchor);  // even s takes U only
  CHECK_THROWS_AS(build_B(f, 4, 2, lines[0]), BadAnchor);      // W must be (d+1)-dim

  // T[n, odd s] rejects E below U
  auto triples = all_subspaces(f, 5, 2);
  for (const auto& e : all_subspaces(f, 5, 1))
    if (contains_in(e, triples[0]))
      CHECK_THROWS_AS(build_T(f, 5, 3, e, triples[0]), BadAnchor);
}

TEST_CASE("predicates answer literally") {
  const Field& f = Field::get(2);
  Family lines = full_layer(f, 3, 1);
  CHECK(is_s_union(lines, 2));
  CHECK(!is_s_union(lines, 1));
  CHECK(is_antichain(lines));
  CHECK(!is_antichain(build_K(f, 3, 2)));
  Family planes = full_layer(f, 3, 2);
  CHECK(is_t_intersecting(planes, 1));
  CHECK(!is_t_intersecting(planes, 2));
  CHECK(is_cross_t_intersecting(planes, planes, 1));
  CHECK(!is_cross_sperner(lines, build_K(f, 3, 2)));
  CHECK(is_cross_sperner(lines.without(lines.members()[0]),
                         Family(f, 3, {lines.members()[0]})));
}

TEST_CASE("dual of an s-union family is (n-s)-intersecting") {
  const Field& f = Field::get(2);
  CHECK(is_t_intersecting(dual(build_K(f, 4, 2)), 2));
  CHECK(is_t_intersecting(dual(build_T(f, 5, 3)), 2));
}
