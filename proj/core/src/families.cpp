#include "qlat/families.hpp"

namespace qlat {
namespace {

Subspace unit_span(const Field& f, unsigned n, unsigned first, unsigned count) {
  Matrix m(count, n);
  for (unsigned i = 0; i < count; ++i) m.at(i, first + i) = 1;
  return Subspace::from_span(f, n, m);
}

void require_anchor(const Subspace& a, const Field& f, unsigned n, unsigned dim,
                    const char* what) {
  if (a.field().q() != f.q() || a.n() != n || a.dim() != dim)
    throw BadAnchor(std::string("anchor ") + what + " has the wrong shape");
}

void append_layers_upto(const Field& f, unsigned n, unsigned d,
                        std::vector<Subspace>& out) {
  for (unsigned i = 0; i <= d; ++i)
    for_each_subspace(f, n, i, [&](const Subspace& s) { out.push_back(s); });
}

}  // namespace

Family build_K(const Field& f, unsigned n, unsigned s, std::optional<Subspace> E) {
  if (s < 2 || s >= n) throw BadParameters("need 2 <= s < n");
  unsigned d = s / 2;
  std::vector<Subspace> members;
  append_layers_upto(f, n, d, members);
  if (s % 2 == 1) {
    Subspace e = E.value_or(unit_span(f, n, 0, 1));
    require_anchor(e, f, n, 1, "E");
    for_each_subspace(f, n, d + 1, [&](const Subspace& x) {
      if (contains_in(e, x)) members.push_back(x);
    });
  } else if (E) {
    throw BadAnchor("K[n,2d] takes no anchor");
  }
  return Family(f, n, std::move(members));
}

Family build_T(const Field& f, unsigned n, unsigned s, std::optional<Subspace> E,
               std::optional<Subspace> U) {
  if (s < 2 || s >= n) throw BadParameters("need 2 <= s < n");
  unsigned d = s / 2;
  std::vector<Subspace> members;
  if (s % 2 == 0) {
    if (E) throw BadAnchor("T[n,2d] takes only the anchor U");
    Subspace u = U.value_or(unit_span(f, n, 0, d + 1));
    require_anchor(u, f, n, d + 1, "U");
    append_layers_upto(f, n, d, members);
    std::erase_if(members, [&](const Subspace& x) {
      return x.dim() == d && intersect(x, u).dim() == 0;
    });
    members.push_back(u);
  } else {
    Subspace e = E.value_or(unit_span(f, n, 0, 1));
    Subspace u = U.value_or(unit_span(f, n, 1, d + 1));
    require_anchor(e, f, n, 1, "E");
    require_anchor(u, f, n, d + 1, "U");
    if (contains_in(e, u)) throw BadAnchor("T[n,2d+1] needs E not below U");
    append_layers_upto(f, n, d, members);
    for_each_subspace(f, n, d + 1, [&](const Subspace& x) {
      if (contains_in(e, x) && intersect(x, u).dim() >= 1) members.push_back(x);
    });
    // the full (d+1)-layer of E+U
    Subspace eu = span(e, u);
    Family top = shadow(Family(f, n, {eu}), d + 1);
    for (const auto& x : top.members()) members.push_back(x);
  }
  return Family(f, n, std::move(members));
}

Family build_J(const Field& f, unsigned n, std::optional<Subspace> D) {
  if (n < 6) throw BadParameters("J[n,5] needs n >= 6");
  Subspace dsp = D.value_or(unit_span(f, n, 0, 3));
  require_anchor(dsp, f, n, 3, "D");
  std::vector<Subspace> members;
  append_layers_upto(f, n, 2, members);
  for_each_subspace(f, n, 3, [&](const Subspace& x) {
    if (intersect(x, dsp).dim() >= 2) members.push_back(x);
  });
  return Family(f, n, std::move(members));
}

Family build_A(const Field& f, unsigned n, unsigned s, std::optional<Subspace> U) {
  if (s < 2 || s > n) throw BadParameters("need 2 <= s <= n");
  unsigned top = (s + 1) / 2;
  Subspace u = U.value_or(unit_span(f, n, 0, top - 1));
  require_anchor(u, f, n, top - 1, "U");
  std::vector<Subspace> members;
  for_each_subspace(f, n, top, [&](const Subspace& x) {
    if (!contains_in(u, x)) members.push_back(x);
  });
  members.push_back(u);
  return Family(f, n, std::move(members));
}

Family build_B(const Field& f, unsigned n, unsigned s, std::optional<Subspace> W) {
  if (s < 2 || s > n) throw BadParameters("need 2 <= s <= n");
  unsigned d = s / 2;
  Subspace w = W.value_or(unit_span(f, n, 0, d + 1));
  require_anchor(w, f, n, d + 1, "W");
  std::vector<Subspace> members;
  for_each_subspace(f, n, d, [&](const Subspace& x) {
    if (!contains_in(x, w)) members.push_back(x);
  });
  members.push_back(w);
  return Family(f, n, std::move(members));
}

bool is_s_union(const Family& fam, unsigned s) {
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].dim() > s) return false;  // the diagonal pair F + F = F
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (span(m[i], m[j]).dim() > s) return false;
  }
  return true;
}

bool is_t_intersecting(const Family& fam, unsigned t) {
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].dim() < t) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (intersect(m[i], m[j]).dim() < t) return false;
  }
  return true;
}

bool is_antichain(const Family& fam) {
  const auto& m = fam.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (contains_in(m[i], m[j]) || contains_in(m[j], m[i])) return false;
  return true;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, unsigned t) {
  for (const auto& x : a.members())
    for (const auto& y : b.members())
      if (intersect(x, y).dim() < t) return false;
  return true;
}

bool is_cross_sperner(const Family& a, const Family& b) {
  for (const auto& x : a.members())
    for (const auto& y : b.members())
      if (contains_in(x, y) || contains_in(y, x)) return false;
  return true;
}

}  // namespace qlat
