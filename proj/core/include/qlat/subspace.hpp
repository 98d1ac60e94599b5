#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlat/gfq.hpp"
#include "qlat/qbinom.hpp"

namespace qlat {

/// A subspace of F_q^n held in canonical form: the basis matrix is the unique
/// RREF of any spanning set, so equality is bytewise. Immutable.
class Subspace {
 public:
  /// Canonicalizes an arbitrary spanning set (rows need not be independent).
  static Subspace from_span(const Field& f, unsigned n, const Matrix& vectors);
  static Subspace zero(const Field& f, unsigned n);
  static Subspace full(const Field& f, unsigned n);

  const Field& field() const { return *f_; }
  unsigned n() const { return n_; }
  unsigned dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }

  bool operator==(const Subspace& o) const {
    return f_->q() == o.f_->q() && n_ == o.n_ && basis_ == o.basis_;
  }
  /// Canonical order: dimension first, then basis bytes.
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  Subspace(const Field& f, unsigned n, Matrix rref_basis)
      : f_(&f), n_(n), basis_(std::move(rref_basis)) {}
  const Field* f_;
  unsigned n_;
  Matrix basis_;
};

Subspace span(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace orth_complement(const Subspace& a);
/// True iff a <= b.
bool contains_in(const Subspace& a, const Subspace& b);

/// Yields every k-subspace of F_q^n exactly once, ordered lexicographically
/// by pivot-column set and then by the free entries (base q, row-major).
/// Throws BudgetExceeded when [n, k]_q > 10^7.
void for_each_subspace(const Field& f, unsigned n, unsigned k,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> all_subspaces(const Field& f, unsigned n, unsigned k);

/// A deduplicated family of subspaces of one ambient space, kept in canonical
/// order (dimension, then basis bytes). Immutable value type.
class Family {
 public:
  Family(const Field& f, unsigned n) : f_(&f), n_(n) {}
  Family(const Field& f, unsigned n, std::vector<Subspace> members);

  const Field& field() const { return *f_; }
  unsigned n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subspace>& members() const { return members_; }
  bool has(const Subspace& s) const;

  Family with(const Subspace& s) const;
  Family without(const Subspace& s) const;

  bool operator==(const Family& o) const {
    return f_->q() == o.f_->q() && n_ == o.n_ && members_ == o.members_;
  }
  bool operator<(const Family& o) const { return members_ < o.members_; }

  unsigned min_dim() const;  ///< throws EmptyFamily
  unsigned max_dim() const;  ///< throws EmptyFamily

  /// Exact text interchange format:
  ///   q=<q> n=<n>
  ///   k=<k> followed by k basis rows per member, members in canonical order.
  /// Rows are digit strings for q <= 9 and comma-separated codes for q > 9.
  /// Lines starting with '#' are comments.
  std::string to_text() const;
  static Family from_text(const Field*, const std::string& text);
  static Family from_text(const std::string& text) { return from_text(nullptr, text); }

 private:
  const Field* f_;
  unsigned n_;
  std::vector<Subspace> members_;
};

/// u-shadow: all u-subspaces below some member. Throws
/// DimensionOrderViolation if a member has dimension < u.
Family shadow(const Family& h, unsigned u);

/// Shade: all (k+1)-subspaces above some member of a k-uniform family.
/// Throws MixedDimensions / TopLayer.
Family shade(const Family& h);

/// Member-wise orthogonal complement.
Family dual(const Family& f);

/// The dimension-i slice of a family.
Family layer(const Family& f, unsigned i);

/// The full layer [V, k] as a Family.
Family full_layer(const Field& f, unsigned n, unsigned k);

}  // namespace qlat
