#include "wreath/linmap.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <sstream>

#include "wreath/parallel.hpp"

namespace wreath {

namespace {

using Column = std::vector<std::pair<std::uint32_t, Scalar>>;

void check_dim(std::size_t d) {
  if (d > std::numeric_limits<std::uint32_t>::max()) {
    throw ShapeMismatch("space of dimension " + std::to_string(d) + " is too large");
  }
}

void require_same_field(const LinMap& a, const LinMap& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch(std::string(op) + " across " + a.field().to_string() + " and " +
                        b.field().to_string());
  }
}

// Sorts a column, sums duplicate rows and drops zeros.
void canonicalize(Column& col) {
  std::sort(col.begin(), col.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    std::uint32_t r = col[i].first;
    Scalar v = std::move(col[i].second);
    std::size_t j = i + 1;
    for (; j < col.size() && col[j].first == r; ++j) v += col[j].second;
    if (!v.is_zero()) col[out++] = {r, std::move(v)};
    i = j;
  }
  col.resize(out);
}

}  // namespace

Space::Space(std::initializer_list<std::size_t> shape) : Space(std::vector<std::size_t>(shape)) {}

Space::Space(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  for (auto d : shape_) {
    if (d == 0) throw ShapeMismatch("tensor factor of dimension 0");
    dim_ *= d;
  }
  check_dim(dim_);
}

Space operator*(const Space& a, const Space& b) {
  std::vector<std::size_t> s = a.shape_;
  s.insert(s.end(), b.shape_.begin(), b.shape_.end());
  return Space(std::move(s));
}

Space Space::pow(std::size_t n) const {
  Space r;
  for (std::size_t i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::vector<std::size_t> Space::unravel(std::size_t index) const {
  std::vector<std::size_t> idx(shape_.size());
  for (std::size_t k = shape_.size(); k-- > 0;) {
    idx[k] = index % shape_[k];
    index /= shape_[k];
  }
  return idx;
}

std::string Space::index_string(std::size_t index) const {
  std::string s = "(";
  const auto idx = unravel(index);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + ")";
}

std::string Space::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < shape_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(shape_[k]);
  }
  return s + "]";
}

Space tensor(const std::vector<Space>& spaces) {
  Space r;
  for (const auto& s : spaces) r = r * s;
  return r;
}

LinMap::LinMap(Space domain, Space codomain, Field field)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      field_(field),
      col_start_(domain_.dim() + 1, 0) {}

LinMap LinMap::identity(const Space& s, Field field) {
  LinMap m(s, s, field);
  const Scalar one = Scalar::in(field, 1);
  m.row_.resize(s.dim());
  m.val_.assign(s.dim(), one);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    m.row_[i] = static_cast<std::uint32_t>(i);
    m.col_start_[i + 1] = i + 1;
  }
  return m;
}

LinMap LinMap::from_dense(const Matrix& m, Space domain, Space codomain) {
  if (m.rows() != codomain.dim() || m.cols() != domain.dim()) {
    throw ShapeMismatch("dense matrix does not match the given spaces");
  }
  LinMap f(std::move(domain), std::move(codomain), m.field());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        f.row_.push_back(static_cast<std::uint32_t>(r));
        f.val_.push_back(m.at(r, c));
      }
    }
    f.col_start_[c + 1] = f.row_.size();
  }
  return f;
}

LinMap LinMap::from_columns(Space domain, Space codomain, Field field,
                            std::vector<Column> columns) {
  if (columns.size() != domain.dim()) throw ShapeMismatch("column count does not match domain");
  LinMap f(std::move(domain), std::move(codomain), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (auto& e : columns[c]) {
      if (e.first >= f.rows()) throw ShapeMismatch("row index outside the codomain");
      e.second = e.second.to_field(field);
    }
    canonicalize(columns[c]);
    for (auto& e : columns[c]) {
      f.row_.push_back(e.first);
      f.val_.push_back(std::move(e.second));
    }
    f.col_start_[c + 1] = f.row_.size();
  }
  return f;
}

LinMap LinMap::from_entries(Space domain, Space codomain, Field field,
                            const std::vector<Entry>& entries) {
  std::vector<Column> cols(domain.dim());
  for (const auto& e : entries) {
    if (e.col >= cols.size()) throw ShapeMismatch("column index outside the domain");
    cols[e.col].emplace_back(static_cast<std::uint32_t>(e.row), e.value);
  }
  return from_columns(std::move(domain), std::move(codomain), field, std::move(cols));
}

Scalar LinMap::at(std::size_t row, std::size_t col) const {
  const auto b = row_.begin() + static_cast<std::ptrdiff_t>(col_start_[col]);
  const auto e = row_.begin() + static_cast<std::ptrdiff_t>(col_start_[col + 1]);
  const auto it = std::lower_bound(b, e, static_cast<std::uint32_t>(row));
  if (it != e && *it == row) return val_[static_cast<std::size_t>(it - row_.begin())];
  return Scalar::in(field_, 0);
}

Matrix LinMap::to_dense() const {
  Matrix m(rows(), cols(), field_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) m.set(row_[k], c, val_[k]);
  }
  return m;
}

LinMap LinMap::transpose() const {
  LinMap t(codomain_, domain_, field_);
  std::vector<std::size_t> count(rows() + 1, 0);
  for (auto r : row_) ++count[r + 1];
  for (std::size_t r = 0; r < rows(); ++r) count[r + 1] += count[r];
  t.col_start_ = count;
  t.row_.resize(nnz());
  t.val_.resize(nnz());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      const std::size_t dst = count[row_[k]]++;
      t.row_[dst] = static_cast<std::uint32_t>(c);
      t.val_[dst] = val_[k];
    }
  }
  return t;
}

LinMap LinMap::reshape(Space domain, Space codomain) const {
  if (domain.dim() != domain_.dim() || codomain.dim() != codomain_.dim()) {
    throw ShapeMismatch("cannot reshape " + domain_.to_string() + "->" + codomain_.to_string() +
                        " as " + domain.to_string() + "->" + codomain.to_string());
  }
  LinMap r = *this;
  r.domain_ = std::move(domain);
  r.codomain_ = std::move(codomain);
  return r;
}

LinMap LinMap::scaled(const Scalar& s) const {
  const Scalar f = s.to_field(field_);
  if (f.is_zero()) return LinMap(domain_, codomain_, field_);
  LinMap r = *this;
  for (auto& v : r.val_) v *= f;
  return r;
}

bool LinMap::is_identity() const {
  if (rows() != cols()) return false;
  for (std::size_t c = 0; c < cols(); ++c) {
    if (col_start_[c + 1] - col_start_[c] != 1) return false;
    if (row_[col_start_[c]] != c || !val_[col_start_[c]].is_one()) return false;
  }
  return true;
}

namespace {

LinMap combine(const LinMap& a, const LinMap& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("sum of maps with different dimensions");
  }
  require_same_field(a, b, "sum");
  std::vector<Column> cols(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t k = a.col_begin(c); k < a.col_end(c); ++k) {
      cols[c].emplace_back(a.row_at(k), a.value_at(k));
    }
    for (std::size_t k = b.col_begin(c); k < b.col_end(c); ++k) {
      cols[c].emplace_back(b.row_at(k), subtract ? -b.value_at(k) : b.value_at(k));
    }
  }
  return LinMap::from_columns(a.domain(), a.codomain(), a.field(), std::move(cols));
}

}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) { return combine(a, b, false); }

LinMap operator-(const LinMap& a, const LinMap& b) { return combine(a, b, true); }

bool operator==(const LinMap& a, const LinMap& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.col_start_ == b.col_start_ &&
         a.row_ == b.row_ && a.val_ == b.val_;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.rows() != f.cols()) {
    throw ShapeMismatch("cannot compose " + f.domain_.to_string() + "->" +
                        f.codomain_.to_string() + " after " + g.domain_.to_string() + "->" +
                        g.codomain_.to_string());
  }
  require_same_field(f, g, "composition");
  const std::size_t ncols = g.cols();
  const std::size_t nrows = f.rows();

  // Blocks of columns are filled independently and concatenated in order.
  const std::size_t block = 256;
  const std::size_t nblocks = (ncols + block - 1) / block;
  struct Part {
    std::vector<std::size_t> len;
    std::vector<std::uint32_t> rows;
    std::vector<Scalar> vals;
  };
  std::vector<Part> parts(nblocks);
  auto work = [&](std::size_t b) {
    Part& part = parts[b];
    std::vector<Scalar> acc(nrows);
    std::vector<char> seen(nrows, 0);
    std::vector<std::uint32_t> touched;
    const std::size_t lo = b * block;
    const std::size_t hi = std::min(ncols, lo + block);
    for (std::size_t c = lo; c < hi; ++c) {
      touched.clear();
      for (std::size_t k = g.col_start_[c]; k < g.col_start_[c + 1]; ++k) {
        const std::size_t mid = g.row_[k];
        const Scalar& gv = g.val_[k];
        for (std::size_t m = f.col_start_[mid]; m < f.col_start_[mid + 1]; ++m) {
          const std::uint32_t r = f.row_[m];
          if (!seen[r]) {
            seen[r] = 1;
            acc[r] = f.val_[m] * gv;
            touched.push_back(r);
          } else {
            acc[r] += f.val_[m] * gv;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      std::size_t n = 0;
      for (auto r : touched) {
        seen[r] = 0;
        if (!acc[r].is_zero()) {
          part.rows.push_back(r);
          part.vals.push_back(std::move(acc[r]));
          ++n;
        }
      }
      part.len.push_back(n);
    }
  };
  if (nblocks > 1 && f.nnz() + g.nnz() > 4096) {
    parallel_for(nblocks, work);
  } else {
    for (std::size_t b = 0; b < nblocks; ++b) work(b);
  }

  LinMap h(g.domain_, f.codomain_, f.field_);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rows.size();
  h.row_.reserve(total);
  h.val_.reserve(total);
  std::size_t c = 0;
  for (auto& p : parts) {
    for (auto n : p.len) {
      h.col_start_[c + 1] = h.col_start_[c] + n;
      ++c;
    }
    h.row_.insert(h.row_.end(), p.rows.begin(), p.rows.end());
    std::move(p.vals.begin(), p.vals.end(), std::back_inserter(h.val_));
  }
  return h;
}

LinMap chain(std::initializer_list<LinMap> maps) {
  if (maps.size() == 0) throw ShapeMismatch("empty composite");
  auto it = std::rbegin(maps);
  LinMap acc = *it;
  for (++it; it != std::rend(maps); ++it) acc = compose(*it, acc);
  return acc;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  require_same_field(f, g, "tensor product");
  LinMap h(f.domain_ * g.domain_, f.codomain_ * g.codomain_, f.field_);
  h.row_.reserve(f.nnz() * g.nnz());
  h.val_.reserve(f.nnz() * g.nnz());
  const std::size_t grows = g.rows();
  std::size_t c = 0;
  for (std::size_t fc = 0; fc < f.cols(); ++fc) {
    for (std::size_t gc = 0; gc < g.cols(); ++gc) {
      for (std::size_t a = f.col_start_[fc]; a < f.col_start_[fc + 1]; ++a) {
        for (std::size_t b = g.col_start_[gc]; b < g.col_start_[gc + 1]; ++b) {
          h.row_.push_back(static_cast<std::uint32_t>(f.row_[a] * grows + g.row_[b]));
          h.val_.push_back(f.val_[a] * g.val_[b]);
        }
      }
      h.col_start_[c + 1] = h.row_.size();
      ++c;
    }
  }
  return h;
}

LinMap tensor(std::initializer_list<LinMap> maps) {
  if (maps.size() == 0) return LinMap::identity(Space());
  auto it = maps.begin();
  LinMap acc = *it;
  for (++it; it != maps.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

LinMap flip(const Space& a, const Space& b, Field field) {
  return permutation({a, b}, {1, 0}, field);
}

LinMap whisker(const Space& left, const LinMap& f, const Space& right) {
  if (left.is_field() && right.is_field()) return f;
  return tensor({LinMap::identity(left, f.field()), f, LinMap::identity(right, f.field())});
}

LinMap whisker_after(const Space& left, const LinMap& f, const Space& right, const LinMap& g) {
  const std::size_t rd = right.dim();
  const std::size_t fin = f.cols();
  if (g.rows() != left.dim() * fin * rd) {
    throw ShapeMismatch("cannot compose whiskered " + f.domain().to_string() + "->" +
                        f.codomain().to_string() + " after " + g.domain().to_string() + "->" +
                        g.codomain().to_string());
  }
  require_same_field(f, g, "composition");
  const std::size_t fout = f.rows();
  std::vector<Column> cols(g.cols());
  auto work = [&](std::size_t c) {
    Column& col = cols[c];
    for (std::size_t k = g.col_begin(c); k < g.col_end(c); ++k) {
      const std::size_t r = g.row_at(k);
      const std::size_t l = r / (fin * rd);
      const std::size_t m = (r / rd) % fin;
      const std::size_t rr = r % rd;
      for (std::size_t q = f.col_begin(m); q < f.col_end(m); ++q) {
        const std::size_t out = (l * fout + f.row_at(q)) * rd + rr;
        col.emplace_back(static_cast<std::uint32_t>(out), f.value_at(q) * g.value_at(k));
      }
    }
  };
  if (g.cols() > 256 && f.nnz() + g.nnz() > 4096) {
    parallel_for(g.cols(), work);
  } else {
    for (std::size_t c = 0; c < g.cols(); ++c) work(c);
  }
  return LinMap::from_columns(g.domain(), left * f.codomain() * right, g.field(),
                              std::move(cols));
}

LinMap permutation(const std::vector<Space>& factors, const std::vector<std::size_t>& order,
                   Field field) {
  if (order.size() != factors.size()) throw ShapeMismatch("permutation of wrong length");
  std::vector<bool> used(order.size(), false);
  for (auto o : order) {
    if (o >= order.size() || used[o]) throw ShapeMismatch("not a permutation");
    used[o] = true;
  }
  const std::size_t n = factors.size();
  std::vector<Space> out_factors(n);
  for (std::size_t k = 0; k < n; ++k) out_factors[k] = factors[order[k]];
  const Space dom = tensor(factors);
  const Space cod = tensor(out_factors);
  // Stride in the output index of each input factor.
  std::vector<std::size_t> out_stride(n);
  std::size_t s = 1;
  for (std::size_t k = n; k-- > 0;) {
    out_stride[order[k]] = s;
    s *= out_factors[k].dim();
  }
  std::vector<std::size_t> in_dim(n);
  for (std::size_t k = 0; k < n; ++k) in_dim[k] = factors[k].dim();
  const Scalar one = Scalar::in(field, 1);
  std::vector<Column> cols(dom.dim());
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t c = 0; c < dom.dim(); ++c) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) r += digit[k] * out_stride[k];
    cols[c].emplace_back(static_cast<std::uint32_t>(r), one);
    for (std::size_t k = n; k-- > 0;) {
      if (++digit[k] < in_dim[k]) break;
      digit[k] = 0;
    }
  }
  return LinMap::from_columns(dom, cod, field, std::move(cols));
}

std::size_t rank(const LinMap& f) { return rank(f.to_dense()); }

std::optional<Difference> first_difference(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("comparing maps of different dimensions " + a.domain().to_string() +
                        "->" + a.codomain().to_string() + " vs " + b.domain().to_string() +
                        "->" + b.codomain().to_string());
  }
  const Scalar zero = Scalar::in(a.field(), 0);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t i = a.col_begin(c);
    std::size_t j = b.col_begin(c);
    while (i < a.col_end(c) || j < b.col_end(c)) {
      const std::size_t ra = i < a.col_end(c) ? a.row_at(i) : a.rows();
      const std::size_t rb = j < b.col_end(c) ? b.row_at(j) : b.rows();
      if (ra == rb) {
        if (a.value_at(i) != b.value_at(j)) return Difference{ra, c, a.value_at(i), b.value_at(j)};
        ++i;
        ++j;
      } else if (ra < rb) {
        return Difference{ra, c, a.value_at(i), zero};
      } else {
        return Difference{rb, c, zero, b.value_at(j)};
      }
    }
  }
  return std::nullopt;
}

std::string describe(const Difference& d, const LinMap& a) {
  std::ostringstream os;
  os << "in=" << a.domain().index_string(d.col) << " out=" << a.codomain().index_string(d.row)
     << " lhs=" << d.lhs << " rhs=" << d.rhs;
  return os.str();
}

}  // namespace wreath
