#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/matrix.hpp"
#include "wreath/scalar.hpp"

namespace wreath {

/// Tensor-shaped vector space: an ordered list of factor dimensions. The
/// empty shape is the base field.
class Space {
 public:
  Space() = default;
  Space(std::initializer_list<std::size_t> shape);
  explicit Space(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t dim() const { return dim_; }
  std::size_t factors() const { return shape_.size(); }
  bool is_field() const { return shape_.empty(); }

  /// Concatenation of shapes (the tensor product).
  friend Space operator*(const Space& a, const Space& b);
  Space pow(std::size_t n) const;

  /// Multi-index of a basis element, leftmost factor most significant.
  std::vector<std::size_t> unravel(std::size_t index) const;
  std::string index_string(std::size_t index) const;
  std::string to_string() const;

  friend bool operator==(const Space& a, const Space& b) { return a.shape_ == b.shape_; }

 private:
  std::vector<std::size_t> shape_;
  std::size_t dim_ = 1;
};

Space tensor(const std::vector<Space>& spaces);

/// Linear map between tensor-shaped spaces, stored as a compressed sparse
/// column matrix of size codomain.dim() x domain.dim() with sorted rows and
/// no explicit zeros.
class LinMap {
 public:
  LinMap() = default;
  /// The zero map.
  LinMap(Space domain, Space codomain, Field field = Field::rational());

  static LinMap identity(const Space& s, Field field = Field::rational());
  static LinMap from_dense(const Matrix& m, Space domain, Space codomain);
  /// Columns as (row, value) lists in any order; duplicates are summed.
  static LinMap from_columns(Space domain, Space codomain, Field field,
                             std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> columns);

  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };
  /// Entries in any order; duplicates are summed.
  static LinMap from_entries(Space domain, Space codomain, Field field,
                             const std::vector<Entry>& entries);

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const Field& field() const { return field_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }
  std::size_t nnz() const { return row_.size(); }

  std::size_t col_begin(std::size_t c) const { return col_start_[c]; }
  std::size_t col_end(std::size_t c) const { return col_start_[c + 1]; }
  std::uint32_t row_at(std::size_t k) const { return row_[k]; }
  const Scalar& value_at(std::size_t k) const { return val_[k]; }

  Scalar at(std::size_t row, std::size_t col) const;
  Matrix to_dense() const;

  LinMap transpose() const;
  /// Same matrix with relabelled shapes of equal total dimension.
  LinMap reshape(Space domain, Space codomain) const;
  LinMap scaled(const Scalar& s) const;
  bool is_identity() const;

  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  /// Entrywise equality of the matrices; shapes are not compared.
  friend bool operator==(const LinMap& a, const LinMap& b);
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  friend LinMap compose(const LinMap& f, const LinMap& g);
  friend LinMap tensor(const LinMap& f, const LinMap& g);

  Space domain_;
  Space codomain_;
  Field field_ = Field::rational();
  std::vector<std::size_t> col_start_ = {0, 0};
  std::vector<std::uint32_t> row_;
  std::vector<Scalar> val_;
};

/// f after g. Throws ShapeMismatch unless g.codomain().dim() == f.domain().dim().
LinMap compose(const LinMap& f, const LinMap& g);
/// maps[0] after maps[1] after ... (diagrammatic order reversed, as in f.g.h).
LinMap chain(std::initializer_list<LinMap> maps);

/// Kronecker product; f's factors come first.
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor(std::initializer_list<LinMap> maps);

/// The symmetry a (x) b -> b (x) a.
LinMap flip(const Space& a, const Space& b, Field field = Field::rational());
/// id_left (x) f (x) id_right.
LinMap whisker(const Space& left, const LinMap& f, const Space& right);
/// whisker(left, f, right) after g, without building the whiskered map.
LinMap whisker_after(const Space& left, const LinMap& f, const Space& right, const LinMap& g);
/// Reorders tensor factors: output factor k is input factor order[k].
LinMap permutation(const std::vector<Space>& factors, const std::vector<std::size_t>& order,
                   Field field = Field::rational());

std::size_t rank(const LinMap& f);

struct Difference {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar lhs;
  Scalar rhs;
};

/// First differing entry in column-major order, if any.
std::optional<Difference> first_difference(const LinMap& a, const LinMap& b);
/// Renders a difference with multi-indices taken from the shapes of a.
std::string describe(const Difference& d, const LinMap& a);

}  // namespace wreath
