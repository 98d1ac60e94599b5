#include "qlat/subspace.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qlat {

Subspace Subspace::from_span(const Field& f, unsigned n, const Matrix& vectors) {
  if (vectors.rows > 0 && vectors.cols != n)
    throw AmbientMismatch("spanning vectors have wrong length");
  Matrix m = vectors;
  m.cols = n;  // allow an empty 0 x 0 input for the zero subspace
  if (m.rows == 0) m.a.clear();
  auto [r, rk] = rref(f, m);
  (void)rk;
  return Subspace(f, n, std::move(r));
}

Subspace Subspace::zero(const Field& f, unsigned n) {
  return Subspace(f, n, Matrix(0, n));
}

Subspace Subspace::full(const Field& f, unsigned n) {
  Matrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return Subspace(f, n, std::move(m));
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  return basis_.a <=> o.basis_.a;
}

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.field().q() != b.field().q() || a.n() != b.n())
    throw AmbientMismatch("subspaces live in different ambient spaces");
}

}  // namespace

Subspace span(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  return Subspace::from_span(a.field(), a.n(), vstack(a.basis(), b.basis()));
}

Subspace orth_complement(const Subspace& a) {
  if (a.dim() == 0) return Subspace::full(a.field(), a.n());
  Matrix ker = kernel_basis(a.field(), a.basis());
  return Subspace::from_span(a.field(), a.n(), ker);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  // A cap B = (A^perp + B^perp)^perp; the dot product is nondegenerate on V.
  return orth_complement(span(orth_complement(a), orth_complement(b)));
}

bool contains_in(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() > b.dim()) return false;
  const Field& f = a.field();
  const Matrix& bb = b.basis();
  std::vector<unsigned> piv(bb.rows);
  for (unsigned i = 0; i < bb.rows; ++i) {
    unsigned c = 0;
    while (bb.at(i, c) == 0) ++c;
    piv[i] = c;
  }
  for (unsigned r = 0; r < a.dim(); ++r) {
    std::vector<uint8_t> v(a.basis().a.begin() + std::size_t(r) * a.n(),
                           a.basis().a.begin() + std::size_t(r + 1) * a.n());
    for (unsigned i = 0; i < bb.rows; ++i) {
      uint8_t c0 = v[piv[i]];
      if (c0 == 0) continue;
      for (unsigned c = 0; c < a.n(); ++c)
        v[c] = f.sub(v[c], f.mul(c0, bb.at(i, c)));
    }
    for (uint8_t x : v)
      if (x != 0) return false;
  }
  return true;
}

void for_each_subspace(const Field& f, unsigned n, unsigned k,
                       const std::function<void(const Subspace&)>& fn) {
  if (k > n) return;
  if (gaussian_binomial(n, k, f.q()) > 10'000'000)
    throw BudgetExceeded("subspace enumeration budget exceeded");
  if (k == 0) {
    fn(Subspace::zero(f, n));
    return;
  }
  const unsigned q = f.q();
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    std::vector<bool> is_piv(n, false);
    for (unsigned p : piv) is_piv[p] = true;
    std::vector<std::pair<unsigned, unsigned>> free_pos;  // row-major
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    unsigned long long total = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) total *= q;
    for (unsigned long long code = 0; code < total; ++code) {
      Matrix m(k, n);
      for (unsigned i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
      unsigned long long c = code;
      for (std::size_t i = free_pos.size(); i-- > 0;) {
        m.at(free_pos[i].first, free_pos[i].second) = uint8_t(c % q);
        c /= q;
      }
      fn(Subspace::from_span(f, n, m));
    }
    // next pivot combination, lexicographic
    unsigned i = k;
    while (i-- > 0) {
      if (piv[i] + 1 <= n - (k - i)) {
        ++piv[i];
        for (unsigned j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<Subspace> all_subspaces(const Field& f, unsigned n, unsigned k) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, k, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

Family::Family(const Field& f, unsigned n, std::vector<Subspace> members)
    : f_(&f), n_(n), members_(std::move(members)) {
  for (const auto& m : members_)
    if (m.field().q() != f.q() || m.n() != n)
      throw AmbientMismatch("family member in a different ambient space");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::has(const Subspace& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Family Family::with(const Subspace& s) const {
  auto m = members_;
  m.push_back(s);
  return Family(*f_, n_, std::move(m));
}

Family Family::without(const Subspace& s) const {
  auto m = members_;
  m.erase(std::remove(m.begin(), m.end(), s), m.end());
  return Family(*f_, n_, std::move(m));
}

unsigned Family::min_dim() const {
  if (members_.empty()) throw EmptyFamily("min_dim of empty family");
  return members_.front().dim();  // sorted by dimension
}

unsigned Family::max_dim() const {
  if (members_.empty()) throw EmptyFamily("max_dim of empty family");
  return members_.back().dim();
}

std::string Family::to_text() const {
  std::ostringstream os;
  os << "q=" << f_->q() << " n=" << n_ << "\n";
  for (const auto& m : members_) {
    os << "k=" << m.dim() << "\n";
    for (unsigned r = 0; r < m.dim(); ++r) {
      for (unsigned c = 0; c < n_; ++c) {
        if (f_->q() > 9 && c) os << ',';
        os << unsigned(m.basis().at(r, c));
      }
      os << "\n";
    }
  }
  return os.str();
}

Family Family::from_text(const Field* f, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty family file");
  unsigned q = 0, n = 0;
  if (std::sscanf(line.c_str(), "q=%u n=%u", &q, &n) != 2)
    throw ParseError("bad header line: " + line);
  const Field& field = f ? *f : Field::get(q);
  if (field.q() != q) throw ParseError("field order mismatch");
  std::vector<Subspace> members;
  while (next_line()) {
    unsigned k = 0;
    if (std::sscanf(line.c_str(), "k=%u", &k) != 1)
      throw ParseError("expected member header, got: " + line);
    if (k > n) throw ParseError("member dimension exceeds ambient dimension");
    Matrix m(k, n);
    for (unsigned r = 0; r < k; ++r) {
      if (!next_line()) throw ParseError("truncated member basis");
      if (q <= 9) {
        if (line.size() != n) throw ParseError("bad basis row: " + line);
        for (unsigned c = 0; c < n; ++c) {
          if (line[c] < '0' || line[c] > '9') throw ParseError("bad digit in row");
          m.at(r, c) = uint8_t(line[c] - '0');
        }
      } else {
        std::istringstream rs(line);
        std::string tok;
        for (unsigned c = 0; c < n; ++c) {
          if (!std::getline(rs, tok, ',')) throw ParseError("short basis row");
          try {
            m.at(r, c) = uint8_t(std::stoul(tok));
          } catch (const std::exception&) {
            throw ParseError("bad code in row: " + line);
          }
        }
      }
      for (unsigned c = 0; c < n; ++c)
        if (m.at(r, c) >= q) throw ParseError("entry out of range");
    }
    Subspace s = Subspace::from_span(field, n, m);
    if (s.dim() != k) throw ParseError("member basis rows are dependent");
    members.push_back(s);
  }
  return Family(field, n, std::move(members));
}

Family shadow(const Family& h, unsigned u) {
  for (const auto& m : h.members())
    if (m.dim() < u)
      throw DimensionOrderViolation("family member below shadow dimension");
  std::vector<Subspace> out;
  for (const auto& m : h.members()) {
    for_each_subspace(h.field(), m.dim(), u, [&](const Subspace& c) {
      out.push_back(Subspace::from_span(
          h.field(), h.n(), mat_mul(h.field(), c.basis(), m.basis())));
    });
  }
  return Family(h.field(), h.n(), std::move(out));
}

Family shade(const Family& h) {
  if (h.empty()) return Family(h.field(), h.n());
  unsigned k = h.min_dim();
  if (h.max_dim() != k) throw MixedDimensions("shade needs a k-uniform family");
  if (k == h.n()) throw TopLayer("shade undefined on the top layer");
  std::vector<Subspace> lines = all_subspaces(h.field(), h.n(), 1);
  std::vector<Subspace> out;
  for (const auto& m : h.members())
    for (const auto& l : lines)
      if (!contains_in(l, m)) out.push_back(span(m, l));
  return Family(h.field(), h.n(), std::move(out));
}

Family dual(const Family& f) {
  std::vector<Subspace> out;
  out.reserve(f.size());
  for (const auto& m : f.members()) out.push_back(orth_complement(m));
  return Family(f.field(), f.n(), std::move(out));
}

Family layer(const Family& f, unsigned i) {
  std::vector<Subspace> out;
  for (const auto& m : f.members())
    if (m.dim() == i) out.push_back(m);
  return Family(f.field(), f.n(), std::move(out));
}

Family full_layer(const Field& f, unsigned n, unsigned k) {
  return Family(f, n, all_subspaces(f, n, k));
}

}  // namespace qlat
