#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qlat/errors.hpp"

namespace qlat {

/// Finite field GF(q) for a prime power q with 2 <= q <= 256.
///
/// Elements are codes 0..q-1. For extension fields (q = p^e, e > 1) a code
/// packs the polynomial coefficients little-endian in base p; reduction uses
/// the Conway polynomial for (p, e), so element encodings are reproducible.
/// All arithmetic goes through precomputed tables. Instances are immutable.
class Field {
 public:
  explicit Field(unsigned q);

  /// Cached instance; the reference stays valid for the program lifetime.
  static const Field& get(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  uint8_t inv(uint8_t a) const { return inv_[a]; }
  uint8_t div(uint8_t a, uint8_t b) const { return mul_[a * q_ + inv_[b]]; }

 private:
  unsigned q_, p_, e_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

/// Dense matrix of element codes, row-major. Plain data; validity of the
/// entries against a particular field is checked by the operations.
struct Matrix {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<uint8_t> a;

  Matrix() = default;
  Matrix(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  uint8_t& at(unsigned r, unsigned c) { return a[std::size_t(r) * cols + c]; }
  uint8_t at(unsigned r, unsigned c) const { return a[std::size_t(r) * cols + c]; }

  bool operator==(const Matrix& o) const = default;
};

/// Unique reduced row echelon form with zero rows dropped, plus the rank.
/// Throws EntryOutOfRange if some entry is >= f.q().
std::pair<Matrix, unsigned> rref(const Field& f, Matrix m);

unsigned rank(const Field& f, const Matrix& m);

Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y);

/// Rows of x followed by rows of y; column counts must match.
Matrix vstack(const Matrix& x, const Matrix& y);

/// RREF basis of the right kernel {v : m v = 0}.
Matrix kernel_basis(const Field& f, const Matrix& m);

}  // namespace qlat
