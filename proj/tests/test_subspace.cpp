#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlat/subspace.hpp"

using namespace qlat;

namespace {

Subspace random_subspace(const Field& f, unsigned n, unsigned k,
                         std::mt19937_64& rng) {
  Matrix m(k, n);
  for (auto& v : m.a) v = uint8_t(rng() % f.q());
  return Subspace::from_span(f, n, m);
}

}  // namespace

TEST_CASE("from_span canonicalizes spanning sets") {
  const Field& f = Field::get(2);
  Matrix a(2, 3);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  a.at(1, 1) = 1; a.at(1, 2) = 1;
  Matrix b(3, 3);
  b.at(0, 0) = 1; b.at(0, 2) = 1;            // sum of the two rows above
  b.at(1, 0) = 1; b.at(1, 1) = 1;
  b.at(2, 1) = 1; b.at(2, 2) = 1;
  CHECK(Subspace::from_span(f, 3, a) == Subspace::from_span(f, 3, b));
}

TEST_CASE("zero and full spaces") {
  const Field& f = Field::get(3);
  Subspace z = Subspace::zero(f, 4);
  Subspace v = Subspace::full(f, 4);
  CHECK(z.dim() == 0);
  CHECK(v.dim() == 4);
  CHECK(contains_in(z, v));
  CHECK(span(z, v) == v);
  CHECK(intersect(z, v) == z);
  CHECK(orth_complement(z) == v);
  CHECK(orth_complement(v) == z);
}

TEST_CASE("dimension formula on random pairs") {
  for (unsigned q : {2u, 3u, 4u}) {
    const Field& f = Field::get(q);
    std::mt19937_64 rng(7 * q);
    for (int trial = 0; trial < 50; ++trial) {
      Subspace a = random_subspace(f, 5, rng() % 4 + 1, rng);
      Subspace b = random_subspace(f, 5, rng() % 4 + 1, rng);
      Subspace s = span(a, b);
      Subspace i = intersect(a, b);
      CHECK(a.dim() + b.dim() == s.dim() + i.dim());
      CHECK(contains_in(i, a));
      CHECK(contains_in(i, b));
      CHECK(contains_in(a, s));
      CHECK(contains_in(b, s));
    }
  }
}

TEST_CASE("orthogonal complement is an involution that flips dimension") {
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q);
    std::mt19937_64 rng(13 * q);
    for (int trial = 0; trial < 40; ++trial) {
      Subspace a = random_subspace(f, 5, rng() % 6, rng);
      Subspace c = orth_complement(a);
      CHECK(c.dim() == 5 - a.dim());
      CHECK(orth_complement(c) == a);
    }
  }
}

TEST_CASE("complement reverses containment and swaps span with intersection") {
  const Field& f = Field::get(2);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Subspace a = random_subspace(f, 4, rng() % 4 + 1, rng);
    Subspace b = random_subspace(f, 4, rng() % 4 + 1, rng);
    CHECK(orth_complement(span(a, b)) ==
          intersect(orth_complement(a), orth_complement(b)));
    if (contains_in(a, b))
      CHECK(contains_in(orth_complement(b), orth_complement(a)));
  }
}

TEST_CASE("enumeration counts match the Gaussian binomial") {
  struct Range { unsigned q, nmax; };
  for (auto [q, nmax] : {Range{2, 5}, Range{3, 4}, Range{4, 3}, Range{5, 3}}) {
    const Field& f = Field::get(q);
    for (unsigned n = 0; n <= nmax; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        auto subs = all_subspaces(f, n, k);
        CHECK(BigNat(subs.size()) == gaussian_binomial(n, k, q));
        auto sorted = subs;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
          CHECK(sorted[i] < sorted[i + 1]);  // all distinct
        for (const auto& s : subs) CHECK(s.dim() == k);
      }
  }
}

TEST_CASE("enumeration budget guard") {
  CHECK_THROWS_AS(for_each_subspace(Field::get(2), 25, 1, [](const Subspace&) {}),
                  BudgetExceeded);
}

TEST_CASE("subspace ordering is dimension-major") {
  const Field& f = Field::get(2);
  Subspace z = Subspace::zero(f, 3);
  auto lines = all_subspaces(f, 3, 1);
  auto planes = all_subspaces(f, 3, 2);
  CHECK(z < lines.front());
  CHECK(lines.back() < planes.front());
}

TEST_CASE("shadow of a full layer is the full lower layer") {
  const Field& f = Field::get(2);
  Family l2 = full_layer(f, 4, 2);
  CHECK(shadow(l2, 1) == full_layer(f, 4, 1));
  CHECK(shadow(l2, 0).size() == 1);
  CHECK_THROWS_AS(shadow(l2, 3), DimensionOrderViolation);
}

TEST_CASE("shade counts and errors") {
  const Field& f = Field::get(2);
  auto lines = all_subspaces(f, 4, 1);
  Family one(f, 4, {lines[0]});
  CHECK(shade(one).size() == 7);  // planes through a line: [3,1]_2
  Family mixed(f, 4, {lines[0], Subspace::zero(f, 4)});
  CHECK_THROWS_AS(shade(mixed), MixedDimensions);
  Family top(f, 4, {Subspace::full(f, 4)});
  CHECK_THROWS_AS(shade(top), TopLayer);
}

TEST_CASE("shade of H equals shadow of the dual family, in size") {
  const Field& f = Field::get(2);
  std::mt19937_64 rng(5);
  auto planes = all_subspaces(f, 4, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Subspace> pick;
    for (const auto& p : planes)
      if (rng() & 1) pick.push_back(p);
    if (pick.empty()) continue;
    Family h(f, 4, pick);
    CHECK(shade(h).size() == shadow(dual(h), 1).size());
  }
}

TEST_CASE("dual is a member-wise involution") {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(11);
  std::vector<Subspace> pick;
  for (unsigned k = 0; k <= 3; ++k)
    for (const auto& s : all_subspaces(f, 3, k))
      if (rng() & 1) pick.push_back(s);
  Family h(f, 3, pick);
  CHECK(dual(dual(h)) == h);
  CHECK(dual(h).size() == h.size());
}

TEST_CASE("layer slices partition a family") {
  const Field& f = Field::get(2);
  std::vector<Subspace> pick;
  std::mt19937_64 rng(3);
  for (unsigned k = 0; k <= 4; ++k)
    for (const auto& s : all_subspaces(f, 4, k))
      if (rng() % 3 == 0) pick.push_back(s);
  Family h(f, 4, pick);
  std::size_t total = 0;
  for (unsigned k = 0; k <= 4; ++k) total += layer(h, k).size();
  CHECK(total == h.size());
}

TEST_CASE("family dedup, membership, and min/max dims") {
  const Field& f = Field::get(2);
  auto lines = all_subspaces(f, 3, 1);
  Family h(f, 3, {lines[0], lines[1], lines[0]});
  CHECK(h.size() == 2);
  CHECK(h.has(lines[0]));
  CHECK(!h.has(lines[2]));
  CHECK(h.with(lines[2]).size() == 3);
  CHECK(h.without(lines[0]).size() == 1);
  CHECK(h.min_dim() == 1);
  CHECK(h.max_dim() == 1);
  CHECK_THROWS_AS(Family(f, 3).min_dim(), EmptyFamily);
}
