#include "repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qlat/bounds.hpp"
#include "qlat/families.hpp"
#include "qlat/search.hpp"
#include "qlat/verify.hpp"

namespace qlat::repro {
namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (why.tellp() > 0) why << "; ";
      why << what;
    }
  }
};

bool family_subset(const Family& a, const Family& b) {
  for (const auto& m : a.members())
    if (!b.has(m)) return false;
  return true;
}

bool same_witness_set(std::vector<Family> got, std::vector<Family> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

void c1_gaussian_engine(Check& c) {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (long long n = 0; n <= 12; ++n)
      for (long long k = 0; k <= n; ++k) {
        BigNat v = gaussian_binomial(n, k, q);
        c.expect(v == gaussian_binomial(n, n - k, q), "symmetry");
        if (n >= 1 && k >= 1) {
          BigNat pascal = q_power(q, (unsigned long long)(n - k)) *
                              gaussian_binomial(n - 1, k - 1, q) +
                          gaussian_binomial(n - 1, k, q);
          c.expect(v == pascal, "Pascal identity");
        }
      }
}

void c2_enumeration(Check& c) {
  auto run = [&](unsigned q, unsigned nmax) {
    const Field& f = Field::get(q);
    for (unsigned n = 0; n <= nmax; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        BigNat counted = all_subspaces(f, n, k).size();
        c.expect(counted == gaussian_binomial(n, k, q),
                 "count mismatch at q=" + std::to_string(q) +
                     " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
  };
  run(2, 5);
  run(3, 4);
  run(4, 3);
  run(5, 3);
}

void c3_disjoint_counts(Check& c) {
  c.expect(disjoint_count(4, 2, 2, 2) == 16, "(4,2,2,2) != 16");
  for (unsigned n = 1; n <= 5; ++n) {
    auto r = verify::lemma22(Field::get(2), n);
    c.expect(r.pass(), "q=2 n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 4; ++n) {
    auto r = verify::lemma22(Field::get(3), n);
    c.expect(r.pass(), "q=3 n=" + std::to_string(n));
  }
}

void c4_optimal_union(Check& c) {
  const Field& f = Field::get(2);
  search::Options naive;
  naive.naive = true;
  naive.enumerate_all = true;
  auto a = search::max_s_union(f, 3, 2, false, naive);
  c.expect(a.maximum == 8, "(3,2,2) max != 8");
  c.expect(a.complete, "(3,2,2) incomplete");
  c.expect(same_witness_set(a.witnesses, {build_K(f, 3, 2)}),
           "(3,2,2) witness set != {K[3,2]}");

  auto b = search::max_s_union(f, 4, 2);
  c.expect(b.maximum == 16 && b.complete, "(4,2,2) max != 16");
  auto d = search::max_s_union(f, 4, 3);
  c.expect(d.maximum == 23 && d.complete, "(4,3,2) max != 23");
  for (const auto& w : b.witnesses) c.expect(is_s_union(w, 2), "unsound witness");
  for (const auto& w : d.witnesses) c.expect(is_s_union(w, 3), "unsound witness");
}

void c5_suboptimal_union(Check& c) {
  const Field& f = Field::get(2);
  search::Options all;
  all.enumerate_all = true;
  auto cert = search::max_s_union(f, 4, 2, true, all);
  c.expect(cert.maximum == 5 && cert.complete, "(4,2,2) excluded max != 5");
  std::vector<Family> t_orbit;
  for (const auto& u : all_subspaces(f, 4, 2))
    t_orbit.push_back(build_T(f, 4, 2, {}, u));
  c.expect(same_witness_set(cert.witnesses, t_orbit),
           "witnesses are not the T[4,2] anchor orbit");

  // constructive route where search is out of budget
  Family t6 = build_T(f, 6, 3);
  c.expect(t6.size() == 71, "|T[6,3]| != 71");
  c.expect(BigNat(t6.size()) == suboptimal_union_bound(6, 3, 2).value,
           "|T[6,3]| != bound");
  c.expect(is_s_union(t6, 3), "T[6,3] not 3-union");
  for (const auto& e : all_subspaces(f, 6, 1))
    c.expect(!family_subset(t6, build_K(f, 6, 3, e)),
             "T[6,3] inside an optimal family");
}

void c6_antichains(Check& c) {
  const Field& f = Field::get(2);
  search::Options naive;
  naive.naive = true;
  naive.enumerate_all = true;
  auto a = search::max_s_union_antichain(f, 3, 3, false, naive);
  c.expect(a.maximum == 7, "(3,3,2) max != 7");
  c.expect(same_witness_set(a.witnesses,
                            {full_layer(f, 3, 1), full_layer(f, 3, 2)}),
           "(3,3,2) witnesses != both middle layers");

  auto b = search::max_s_union_antichain(f, 4, 4);
  c.expect(b.maximum == 35 && b.complete, "(4,4,2) max != 35");
  c.expect(!b.witnesses.empty() && b.witnesses.front() == full_layer(f, 4, 2),
           "(4,4,2) witness != [V,2]");

  search::Options all;
  all.enumerate_all = true;
  auto e = search::max_s_union_antichain(f, 4, 4, true, all);
  c.expect(e.maximum == 29 && e.complete, "(4,4,2) excluded max != 29");
  std::vector<Family> orbit;
  for (const auto& u : all_subspaces(f, 4, 1)) orbit.push_back(build_A(f, 4, 4, u));
  for (const auto& w : all_subspaces(f, 4, 3)) orbit.push_back(build_B(f, 4, 4, w));
  c.expect(same_witness_set(e.witnesses, orbit),
           "witnesses are not the A[4,4]/B[4,4] anchor orbits");
}

void c7_even_suboptimal_antichain(Check& c) {
  const Field& f = Field::get(2);
  search::Options all;
  all.enumerate_all = true;
  auto cert = search::max_s_union_antichain(f, 4, 2, true, all);
  c.expect(cert.maximum == 13 && cert.complete, "(4,2,2) excluded max != 13");
  c.expect(BigNat(cert.maximum) == suboptimal_antichain_bound(4, 2, 2).value,
           "maximum != [4,1] - q");
  std::vector<Family> orbit;
  for (const auto& w : all_subspaces(f, 4, 2)) orbit.push_back(build_B(f, 4, 2, w));
  c.expect(same_witness_set(cert.witnesses, orbit),
           "witnesses are not the B[4,2] anchor orbit");
}

void c8_shadow_shade(Check& c) {
  const Field& f = Field::get(2);
  auto a = verify::shadow_theorem(f, 3, 2, verify::Mode::exhaustive);
  c.expect(a.pass(), "shadow(3,2,2) failed");
  auto b = verify::shade_lemma(f, 4, 1, verify::Mode::exhaustive);
  c.expect(b.pass() && b.equality_cases == 15, "shade(4,1,2) failed");
  auto d = verify::shade_lemma(f, 4, 3, verify::Mode::exhaustive);
  c.expect(d.pass() && d.equality_cases == 15, "shade(4,3,2) failed");
}

void c9_cross_lemma(Check& c, bool quick) {
  const Field& f = Field::get(2);
  auto a = verify::cross_lemma(f, 4, 1, 0);
  c.expect(a.pass() && a.equality_cases >= 1, "(4,1,2) extremal pair");
  auto b = verify::cross_lemma(f, 3, 1, 0);
  c.expect(b.pass(), "(3,1,2) exhaustive pairs");
  auto d = verify::cross_lemma(f, 6, 2, quick ? 1000 : 10000);
  c.expect(d.pass(), "(6,2,2) random pairs");
}

void c10_conjecture(Check& c) {
  const Field& f = Field::get(2);
  auto rep = search::conjecture_scan(f, 4, 1);
  c.expect(rep.optimal.complete && rep.suboptimal.complete, "scan incomplete");
  c.expect(rep.suboptimal.maximum == 13, "suboptimal max != 13");
  c.expect(rep.value_matches, "value != conjectured [n,d] - q [d,1]");

  // The scan refutes the uniqueness clause at (4,2,1): besides the 35
  // B[4,3] anchor families there are 105 further extremal families, each of
  // the form {e} + (lines outside a solid S containing e) + (planes of S
  // avoiding e). The certificate with these counterexample witnesses is the
  // acceptance artifact; certify that the refutation is exact.
  std::vector<Family> b_orbit;
  for (const auto& w : all_subspaces(f, 4, 2))
    b_orbit.push_back(build_B(f, 4, 3, w));
  std::size_t in_orbit = 0;
  for (const auto& fam : b_orbit) {
    bool found = false;
    for (const auto& wit : rep.suboptimal.witnesses)
      if (wit == fam) {
        found = true;
        break;
      }
    if (found) ++in_orbit;
  }
  c.expect(in_orbit == b_orbit.size(), "B[4,3] orbit missing from witnesses");
  c.expect(!rep.witnesses_match_B, "uniqueness unexpectedly confirmed");
  c.expect(rep.suboptimal.witnesses.size() == 140,
           "counterexample count != 105 beyond the 35-family B orbit");
}

void c11_duality(Check& c, bool quick) {
  const unsigned trials = quick ? 50 : 200;
  for (unsigned q : {2u, 3u}) {
    const Field& f = Field::get(q);
    for (unsigned n = 3; n <= 4; ++n)
      for (unsigned s = 2; s < n; ++s) {
        std::mt19937_64 rng(1000 * q + 10 * n + s);
        for (unsigned t = 0; t < trials; ++t) {
          Family fam = search::random_s_union_family(f, n, s, rng);
          Family d = dual(fam);
          c.expect(is_t_intersecting(d, n - s), "dual not (n-s)-intersecting");
          c.expect(dual(d) == fam, "dual not an involution");
          for (unsigned i = 0; i <= s / 2; ++i) {
            std::size_t hi =
                s + 1 - i <= n ? layer(fam, s + 1 - i).size() : 0;
            c.expect(BigNat(layer(fam, i).size()) + hi <=
                         gaussian_binomial(n, i, q),
                     "layer inequality fails");
          }
        }
      }
  }
}

CriterionResult timed(int id, const std::string& name,
                      const std::function<void(Check&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  r.pass = c.ok;
  r.detail = c.why.str();
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(bool quick) {
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "gaussian binomial engine", c1_gaussian_engine));
  out.push_back(timed(2, "enumeration vs formula", c2_enumeration));
  out.push_back(timed(3, "disjoint-space counts", c3_disjoint_counts));
  out.push_back(timed(4, "optimal s-union search", c4_optimal_union));
  out.push_back(timed(5, "suboptimal s-union search", c5_suboptimal_union));
  out.push_back(timed(6, "antichain searches", c6_antichains));
  out.push_back(
      timed(7, "even suboptimal antichain", c7_even_suboptimal_antichain));
  out.push_back(timed(8, "shadow and shade verifiers", c8_shadow_shade));
  out.push_back(timed(9, "sharpened cross bound",
                      [&](Check& c) { c9_cross_lemma(c, quick); }));
  out.push_back(timed(10, "odd suboptimal antichain scan", c10_conjecture));
  out.push_back(
      timed(11, "duality and layer inequality",
            [&](Check& c) { c11_duality(c, quick); }));
  return out;
}

}  // namespace qlat::repro
