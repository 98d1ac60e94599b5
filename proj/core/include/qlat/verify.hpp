#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlat/subspace.hpp"

namespace qlat::verify {

enum class Mode { exhaustive, sample };

/// Outcome of a brute-force verification run. A run passes iff the
/// counterexample list is empty and every equality case had the structure the
/// statement asserts.
struct Report {
  std::string name;
  std::uint64_t cases_checked = 0;
  std::uint64_t equality_cases = 0;
  std::vector<std::string> counterexamples;
  bool structure_ok = true;
  std::uint64_t seed = 0;
  bool pass() const { return counterexamples.empty() && structure_ok; }
};

/// Shadow lower bound |shadow(H)| >= [m, k-1] with [m, k] = |H| over every
/// (or `samples` random) nonempty H in [V, k]; equality cases must be full
/// k-layers of an integral-dimension subspace. For t-intersecting H the
/// normalized shadow ratio bound is checked for all k-t <= u <= k.
Report shadow_theorem(const Field& f, unsigned n, unsigned k, Mode mode,
                      std::uint64_t samples = 0, std::uint64_t seed = 1);

/// Shadow/shade gap bounds: |shadow(H)| - |H| >= q [k-1, 1] when
/// k >= ceil(n/2)+1, |shade(H)| - |H| >= q [n-k-1, 1] when k <= floor(n/2)-1;
/// equality exactly at singletons.
Report shade_lemma(const Field& f, unsigned n, unsigned k, Mode mode,
                   std::uint64_t samples = 0, std::uint64_t seed = 1);

/// Sharpened cross bound: extremal-pair equality, seeded random pairs, and
/// (at tiny parameters) exhaustive pair enumeration.
Report cross_lemma(const Field& f, unsigned n, unsigned k,
                   std::uint64_t trials, std::uint64_t seed = 1);

/// Disjoint-space count: closed form = inclusion-exclusion = exhaustive
/// enumeration, plus the stated lower bound, for all m + l <= n.
Report lemma22(const Field& f, unsigned n);

/// Layer inequality |F_i| + |F_{s+1-i}| <= [n, i] on seeded random s-union
/// families.
Report layer_inequality(const Field& f, unsigned n, unsigned s,
                        std::uint64_t trials, std::uint64_t seed = 1);

}  // namespace qlat::verify
