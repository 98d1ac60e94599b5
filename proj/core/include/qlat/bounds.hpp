#pragma once

#include <map>
#include <string>

#include "qlat/qbinom.hpp"

namespace qlat {

/// Result of evaluating one of the closed-form bounds. `hypothesis_ok`
/// records whether the side conditions of the corresponding theorem hold at
/// these parameters; the value itself is always the formula, evaluated
/// exactly. `formula` is the expression in a small grammar (integers, `q`,
/// `gb(a,b)`, `^ * + -`, `max(..,..)`) so a second, independent evaluator can
/// reproduce the value.
struct BoundReport {
  std::string theorem;
  std::map<std::string, long long> params;
  unsigned q = 0;
  BigNat value;
  bool hypothesis_ok = true;
  bool conjectural = false;
  std::string formula;
  std::string branch;  // which branch attained a max, when applicable
};

/// Largest s-union family: sum_{i<=d} [n,i], plus [n-1,d] when s is odd.
BoundReport optimal_union_bound(unsigned n, unsigned s, unsigned q);

/// Largest s-union family not contained in any optimal one.
BoundReport suboptimal_union_bound(unsigned n, unsigned s, unsigned q);

/// Largest s-union antichain: [n, floor(s/2)].
BoundReport antichain_bound(unsigned n, unsigned s, unsigned q);

/// Largest s-union antichain not contained in any optimal one. The odd-s
/// (s < n) expression is conjectural and flagged as such.
BoundReport suboptimal_antichain_bound(unsigned n, unsigned s, unsigned q);

/// Largest t-intersecting family in [V, k].
BoundReport ekr_bound(unsigned n, unsigned k, unsigned t, unsigned q);

/// Largest intersecting family in [V, k] with trivial common intersection.
BoundReport hm_bound(unsigned n, unsigned k, unsigned q);

/// Largest |A| + |B| over cross-t-intersecting pairs A in [V,a], B in [V,b].
BoundReport cross_t_bound(unsigned n, unsigned a, unsigned b, unsigned t,
                          unsigned q);

/// Largest |A| + |B| over cross-Sperner pairs A in [V,a], B in [V,b].
BoundReport cross_sperner_bound(unsigned n, unsigned a, unsigned b, unsigned q);

/// Sharpened cross bound for A in [V,k], B in [V,k+1] with B 2-intersecting.
BoundReport cross_sharp_bound(unsigned n, unsigned k, unsigned q);

}  // namespace qlat
