#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qlat/bounds.hpp"
#include "qlat/families.hpp"

namespace qlat::search {

/// Pairwise constraints defining the compatibility graph. A family satisfies
/// the constraint set iff it is a clique of admissible vertices.
struct Constraints {
  std::optional<unsigned> s_union;
  std::optional<unsigned> t_intersecting;
  bool antichain = false;
  /// Apply the s-union cap only to pairs of equal dimension (the diagonal
  /// still caps every member at dimension s). This is the reading under which
  /// the suboptimal 2-union antichain bound [n,1] - q is attained by B[n,2]:
  /// a line outside the anchor plane spans dimension 3 with it, so under the
  /// unrestricted cap that family would not be 2-union at all. For odd s and
  /// for s = n the two readings coincide on antichains of dimensions d, d+1.
  bool union_same_dim_only = false;
};

struct Options {
  bool enumerate_all = false;
  /// Exhaustive subset scan over all of L(V) instead of branch-and-bound;
  /// cross-validation path, guarded at 2^20 subsets.
  bool naive = false;
  unsigned workers = 1;
  std::size_t vertex_budget = 400;
};

/// Record of a completed extremal search. `witnesses` holds every maximum
/// family when enumeration was requested, else one (deterministic: the first
/// in canonical depth-first order). `complete` is true only when the whole
/// tree was exhausted or pruned soundly; searches that cannot finish within
/// the budget throw instead.
struct Certificate {
  unsigned n = 0, q = 0;
  Constraints constraints;
  std::size_t exclusion_count = 0;
  std::size_t maximum = 0;
  std::vector<Family> witnesses;
  std::uint64_t nodes = 0;
  bool complete = false;
};

/// Maximum clique over the compatibility graph, restricted to families not
/// contained in any member of `exclusions`.
Certificate max_family(const Field& f, unsigned n, const Constraints& cs,
                       const std::vector<Family>& exclusions,
                       const Options& opt = {});

/// Maximum s-union family; with exclude_optimal, only families not contained
/// in any optimal family of Theorem-1.2 type (all anchors for odd s).
Certificate max_s_union(const Field& f, unsigned n, unsigned s,
                        bool exclude_optimal = false, const Options& opt = {});

/// Maximum s-union antichain; with exclude_optimal, the exclusion set is the
/// matching theorem's clause (s = n: both middle layers; s = 2d < n: [V,d];
/// s odd < n: all optimal antichains, enumerated first).
Certificate max_s_union_antichain(const Field& f, unsigned n, unsigned s,
                                  bool exclude_optimal = false,
                                  const Options& opt = {});

struct ConjectureReport {
  unsigned n = 0, q = 0, d = 0;
  Certificate optimal;     ///< all optimal (2d+1)-union antichains
  Certificate suboptimal;  ///< maximum outside every optimal family
  BigNat conjectured_value;
  bool value_matches = false;
  bool witnesses_match_B = false;
};

/// Adjudicates Conjecture 5.1 at (n, q, 2d+1) by exhaustive search.
ConjectureReport conjecture_scan(const Field& f, unsigned n, unsigned d,
                                 const Options& opt = {});

/// Seeded random s-union family, grown greedily from a shuffled vertex list.
Family random_s_union_family(const Field& f, unsigned n, unsigned s,
                             std::mt19937_64& rng);

}  // namespace qlat::search
