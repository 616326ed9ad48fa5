#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "wreath/errors.hpp"
#include "wreath/matrix.hpp"
#include "wreath/oracle.hpp"

using namespace wreath;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Field f,
                     int range = 4) {
  std::uniform_int_distribution<int> v(-range, range);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::in(f, v(rng)));
  return m;
}

// Product of a random r-column and a random r-row factor, of rank at most r.
Matrix low_rank(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  return random_matrix(rng, n, r, Field::rational()) * random_matrix(rng, r, n, Field::rational());
}

}  // namespace

TEST_CASE("rational scalars stay reduced") {
  CHECK(Scalar(3, 6) == Scalar(1, 2));
  CHECK(Scalar(-2, -4) == Scalar(1, 2));
  CHECK(Scalar(1, -3).to_string() == "-1/3");
  CHECK((Scalar(1, 2) + Scalar(1, 3)) == Scalar(5, 6));
  CHECK((Scalar(2, 3) * Scalar(3, 4)) == Scalar(1, 2));
  CHECK((Scalar(1, 2) / Scalar(1, 4)) == Scalar(2));
  CHECK(Scalar(7).inverse() == Scalar(1, 7));
  CHECK_THROWS_AS(Scalar(1, 0), Error);
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("overflow promotes to arbitrary precision and back") {
  const Scalar big(std::numeric_limits<std::int64_t>::max());
  const Scalar sum = big + Scalar(1);
  CHECK(sum.to_string() == "9223372036854775808");
  CHECK(sum - Scalar(1) == big);
  const Scalar sq = big * big;
  CHECK(sq / big == big);
  const Scalar frac = Scalar(1, std::numeric_limits<std::int64_t>::max()) * Scalar(1, 3);
  CHECK(frac * Scalar(3) == Scalar(1, std::numeric_limits<std::int64_t>::max()));
  CHECK(-Scalar(std::numeric_limits<std::int64_t>::min()) ==
        Scalar(std::numeric_limits<std::int64_t>::max()) + Scalar(1));
}

TEST_CASE("prime fields") {
  const Field f = Field::prime(7);
  CHECK(f.to_string() == "prime:7");
  CHECK(Field::parse("prime:7") == f);
  CHECK(Field::parse("Q") == Field::rational());
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::parse("prime:x"), Error);
  CHECK_THROWS_AS(Field::parse("reals"), Error);
  const Scalar a = Scalar::in(f, 3);
  CHECK((a * a.inverse()).is_one());
  CHECK((a + Scalar::in(f, 4)).is_zero());
  CHECK(Scalar::parse("1/2", f) == Scalar::in(f, 4));
  CHECK((a * Scalar(5)) == Scalar::in(f, 1));
  CHECK_THROWS_AS(a + Scalar::in(Field::prime(5), 1), FieldMismatch);
  CHECK_THROWS_AS(Scalar::parse("1/7", f), Error);
  CHECK_THROWS_AS(a.to_mpq(), Error);
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("-3/9", Field::rational()) == Scalar(-1, 3));
  CHECK(Scalar::parse("123456789012345678901234567890", Field::rational()).to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Scalar::parse("", Field::rational()), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0", Field::rational()), Error);
  CHECK_THROWS_AS(Scalar::parse("abc", Field::rational()), Error);
}

TEST_CASE("rref of a fixed matrix") {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const Rref r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(rank(m) == 2);
  const Matrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK(m * k == Matrix(3, 1));
  CHECK(image_basis(m) == Matrix::from_rows({{1, 2}, {2, 4}, {1, 0}}));
}

TEST_CASE("splitting an idempotent") {
  // Projection onto the line spanned by (1, 1) along (1, -1).
  const Matrix e = Matrix::from_rows({{Scalar(1, 2), Scalar(1, 2)}, {Scalar(1, 2), Scalar(1, 2)}});
  const Splitting s = split_idempotent(e);
  CHECK(s.iota.cols() == 1);
  CHECK(s.iota * s.pi == e);
  CHECK(s.pi * s.iota == Matrix::identity(1));
  CHECK_THROWS_AS(split_idempotent(Matrix::from_rows({{2}})), NotIdempotent);
  CHECK_THROWS_AS(split_idempotent(Matrix(2, 3)), NotIdempotent);
  const Splitting z = split_idempotent(Matrix(3, 3));
  CHECK(z.iota.cols() == 0);
}

TEST_CASE("rank agrees with the independent oracle and with the transpose") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Matrix m = low_rank(rng, n, 1 + trial % n);
    oracle::Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = m.at(i, j).to_mpq();
    CHECK(rank(m) == oracle::rank(d));
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) + kernel_basis(m).cols() == n);
    CHECK(m * kernel_basis(m) == Matrix(n, kernel_basis(m).cols()));
  }
}

TEST_CASE("rank-nullity over a prime field") {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 4, 6, f, 1);
    const Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == 6);
    CHECK(m * k == Matrix(4, k.cols(), f));
  }
}

TEST_CASE("split idempotents built from random projections") {
  std::mt19937_64 rng(17);
  CHECK(split_idempotent(Matrix::identity(4)).iota == Matrix::identity(4));
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + trial % 4;
    // orthogonal projection e = B (B^T B)^-1 B^T onto the image of a random matrix
    const Matrix b = image_basis(low_rank(rng, n, 1 + trial % 3));
    const Matrix g = b.transpose() * b;
    const std::size_t r = g.rows();
    Matrix aug(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        aug.set(i, j, g.at(i, j));
        aug.set(i, r + j, i == j ? Scalar(1) : Scalar(0));
      }
    const Matrix red = rref(aug).reduced;
    Matrix inv(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) inv.set(i, j, red.at(i, r + j));
    const Matrix e = b * inv * b.transpose();
    REQUIRE(e * e == e);
    const Splitting s = split_idempotent(e);
    CHECK(s.iota.cols() == r);
    CHECK(s.iota * s.pi == e);
    CHECK(s.pi * s.iota == Matrix::identity(r));
  }
}
