#include "wreath/matrix.hpp"

#include <utility>

namespace wreath {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::in(field, 0)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = Scalar::in(field, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), c, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw ShapeMismatch("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  a_[r * cols_ + c] = v.to_field(field_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.a_[c * rows_ + r] = a_[r * cols_ + c];
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product of incompatible sizes");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
  Matrix p(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.a_[i * a.cols_ + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b.a_[k * b.cols_ + j];
        if (!y.is_zero()) p.a_[i * b.cols_ + j] += x * y;
      }
    }
  }
  return p;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, std::move(tmp));
      }
    }
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a.at(r, j).is_zero()) a.set(r, j, a.at(r, j) * inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a.at(r, j).is_zero()) a.set(i, j, a.at(i, j) - f * a.at(r, j));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Rref rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix k(n, free.size(), m.field());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, Scalar::in(m.field(), 1));
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      k.set(rr.pivots[r], f, -rr.reduced.at(r, free[f]));
    }
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  const Rref rr = rref(m);
  Matrix b(m.rows(), rr.pivots.size(), m.field());
  for (std::size_t j = 0; j < rr.pivots.size(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) b.set(i, j, m.at(i, rr.pivots[j]));
  }
  return b;
}

Splitting split_idempotent(const Matrix& e) {
  if (!e.is_square() || e * e != e) throw NotIdempotent("matrix is not idempotent");
  const Rref rr = rref(e);
  const std::size_t r = rr.pivots.size();
  Splitting s{Matrix(e.rows(), r, e.field()), Matrix(r, e.cols(), e.field())};
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < e.rows(); ++i) s.iota.set(i, j, e.at(i, rr.pivots[j]));
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) s.pi.set(i, j, rr.reduced.at(i, j));
  }
  return s;
}

}  // namespace wreath
