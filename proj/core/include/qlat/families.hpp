#pragma once

#include <optional>

#include "qlat/subspace.hpp"

namespace qlat {

// Constructors for the named extremal families. Default anchors are spans of
// unit vectors in fixed positions, so outputs are deterministic.

/// Katona family K[n,s]: everything of dimension <= floor(s/2); for odd s
/// also the (d+1)-spaces through a fixed 1-space E.
Family build_K(const Field& f, unsigned n, unsigned s,
               std::optional<Subspace> E = {});

/// Suboptimal family T[n,s]. Even s: drop the d-spaces disjoint from a fixed
/// (d+1)-space U and add U. Odd s: the (d+1)-spaces through E that meet U,
/// together with the full (d+1)-layer of E+U, on top of the dimensions <= d.
Family build_T(const Field& f, unsigned n, unsigned s,
               std::optional<Subspace> E = {}, std::optional<Subspace> U = {});

/// J[n,5]: dimensions <= 2 plus the 3-spaces meeting a fixed 3-space D in
/// dimension >= 2.
Family build_J(const Field& f, unsigned n, std::optional<Subspace> D = {});

/// Antichain A[n,s]: the ceil(s/2)-layer minus the spaces over a fixed
/// (ceil(s/2)-1)-space U, plus U.
Family build_A(const Field& f, unsigned n, unsigned s,
               std::optional<Subspace> U = {});

/// Antichain B[n,s]: the floor(s/2)-layer minus the spaces inside a fixed
/// (floor(s/2)+1)-space W, plus W.
Family build_B(const Field& f, unsigned n, unsigned s,
               std::optional<Subspace> W = {});

// Literal quantified predicates; these are the trusted oracle layer, so they
// stay O(|F|^2) pairwise lattice checks with no indexing tricks.

/// dim(F + F') <= s for all ordered pairs, including F = F'.
bool is_s_union(const Family& fam, unsigned s);
/// dim(F cap F') >= t for all pairs, including F = F'.
bool is_t_intersecting(const Family& fam, unsigned t);
/// No member contained in another (distinct pairs).
bool is_antichain(const Family& fam);
bool is_cross_t_intersecting(const Family& a, const Family& b, unsigned t);
bool is_cross_sperner(const Family& a, const Family& b);

}  // namespace qlat
