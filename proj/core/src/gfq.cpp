#include "qlat/gfq.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace qlat {
namespace {

struct ConwayEntry {
  unsigned p, e;
  // Coefficients a0..a_{e-1} of the monic Conway polynomial
  // x^e + a_{e-1} x^{e-1} + ... + a0 over GF(p).
  std::array<uint8_t, 8> lower;
};

// Conway polynomials for all prime powers p^e <= 256 with e > 1.
constexpr ConwayEntry kConway[] = {
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0}},
    {2, 6, {1, 1, 0, 1, 1, 0}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0}},
    {3, 2, {2, 2}},
    {3, 3, {1, 2, 0}},
    {3, 4, {2, 0, 0, 2}},
    {3, 5, {1, 2, 0, 0, 0}},
    {5, 2, {2, 4}},
    {5, 3, {3, 3, 0}},
    {7, 2, {3, 6}},
    {11, 2, {2, 7}},
    {13, 2, {2, 12}},
};

const ConwayEntry* find_conway(unsigned p, unsigned e) {
  for (const auto& c : kConway)
    if (c.p == p && c.e == e) return &c;
  return nullptr;
}

using Poly = std::vector<unsigned>;  // coefficients mod p, little-endian

Poly decode(unsigned code, unsigned p, unsigned e) {
  Poly d(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

unsigned encode(const Poly& d, unsigned p, unsigned e) {
  unsigned code = 0;
  for (unsigned i = e; i-- > 0;) code = code * p + d[i];
  return code;
}

}  // namespace

Field::Field(unsigned q) : q_(q) {
  if (q < 2 || q > 256) throw NotPrimePower("field order must be in [2, 256]");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1)
    throw NotPrimePower("not a prime power: " + std::to_string(q));
  p_ = p;
  e_ = e;

  add_.resize(std::size_t(q) * q);
  mul_.resize(std::size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  if (e == 1) {
    for (unsigned a = 0; a < q; ++a) {
      neg_[a] = uint8_t((q - a) % q);
      for (unsigned b = 0; b < q; ++b) {
        add_[a * q + b] = uint8_t((a + b) % q);
        mul_[a * q + b] = uint8_t((a * b) % q);
      }
    }
  } else {
    const ConwayEntry* cw = find_conway(p, e);
    if (!cw) throw NotPrimePower("no modulus polynomial for this order");
    for (unsigned a = 0; a < q; ++a) {
      Poly da = decode(a, p, e);
      Poly nd(e);
      for (unsigned i = 0; i < e; ++i) nd[i] = (p - da[i]) % p;
      neg_[a] = uint8_t(encode(nd, p, e));
      for (unsigned b = 0; b < q; ++b) {
        Poly db = decode(b, p, e);
        Poly s(e);
        for (unsigned i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
        add_[a * q + b] = uint8_t(encode(s, p, e));
        // product, then reduce modulo x^e + lower(x)
        std::vector<unsigned> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
          for (unsigned j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned i = 2 * e - 2; i + 1 > e; --i) {
          unsigned c = prod[i];
          if (c == 0) continue;
          prod[i] = 0;
          for (unsigned j = 0; j < e; ++j)
            prod[i - e + j] = (prod[i - e + j] + c * (p - cw->lower[j])) % p;
        }
        Poly red(prod.begin(), prod.begin() + e);
        mul_[a * q + b] = uint8_t(encode(red, p, e));
      }
    }
  }

  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = uint8_t(b);
        break;
      }
}

const Field& Field::get(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  std::lock_guard lk(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_unique<Field>(q)).first;
  return *it->second;
}

std::pair<Matrix, unsigned> rref(const Field& f, Matrix m) {
  for (uint8_t v : m.a)
    if (v >= f.q()) throw EntryOutOfRange("matrix entry not a field element");
  unsigned lead = 0;
  for (unsigned col = 0; col < m.cols && lead < m.rows; ++col) {
    unsigned piv = lead;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (unsigned c = 0; c < m.cols; ++c)
        std::swap(m.at(piv, c), m.at(lead, c));
    uint8_t s = f.inv(m.at(lead, col));
    for (unsigned c = 0; c < m.cols; ++c) m.at(lead, c) = f.mul(m.at(lead, c), s);
    for (unsigned r = 0; r < m.rows; ++r) {
      if (r == lead) continue;
      uint8_t c0 = m.at(r, col);
      if (c0 == 0) continue;
      for (unsigned c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(c0, m.at(lead, c)));
    }
    ++lead;
  }
  Matrix out(lead, m.cols);
  std::copy(m.a.begin(), m.a.begin() + std::size_t(lead) * m.cols, out.a.begin());
  return {out, lead};
}

unsigned rank(const Field& f, const Matrix& m) { return rref(f, m).second; }

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw EntryOutOfRange("matrix shape mismatch");
  Matrix out(x.rows, y.cols);
  for (unsigned i = 0; i < x.rows; ++i)
    for (unsigned k = 0; k < x.cols; ++k) {
      uint8_t v = x.at(i, k);
      if (v == 0) continue;
      for (unsigned j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
    }
  return out;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
  if (x.rows == 0) return Matrix{y};
  if (y.rows == 0) return Matrix{x};
  if (x.cols != y.cols) throw EntryOutOfRange("column count mismatch");
  Matrix out(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), out.a.begin());
  std::copy(y.a.begin(), y.a.end(), out.a.begin() + x.a.size());
  return out;
}

Matrix kernel_basis(const Field& f, const Matrix& m) {
  auto [r, rk] = rref(f, m);
  unsigned n = m.cols;
  std::vector<unsigned> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (unsigned i = 0; i < rk; ++i) {
    unsigned c = 0;
    while (r.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Matrix ker(n - rk, n);
  unsigned row = 0;
  for (unsigned fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    ker.at(row, fc) = 1;
    for (unsigned i = 0; i < rk; ++i)
      ker.at(row, pivot_col[i]) = f.neg(r.at(i, fc));
    ++row;
  }
  return rref(f, ker).first;
}

}  // namespace qlat
