#pragma once

#include <cstddef>
#include <vector>

#include "wreath/scalar.hpp"

namespace wreath {

/// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rational());

  static Matrix identity(std::size_t n, Field field = Field::rational());
  /// Rows given as integers or scalars; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          Field field = Field::rational());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v);

  Matrix transpose() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::rational();
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the null space, one vector per column.
Matrix kernel_basis(const Matrix& m);
/// Basis of the column space: the pivot columns of m.
Matrix image_basis(const Matrix& m);

struct Splitting {
  Matrix iota;  // n x r, the pivot columns of e
  Matrix pi;    // r x n, the nonzero rows of rref(e)
};

/// Splits an idempotent e as iota * pi = e with pi * iota = 1.
/// Throws NotIdempotent unless e is square with e * e = e.
Splitting split_idempotent(const Matrix& e);

}  // namespace wreath
