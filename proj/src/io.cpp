#include "wreath/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wreath/errors.hpp"
#include "wreath/spinchain.hpp"

namespace wreath {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line l{number, {}};
    for (std::string tok; ss >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  if (in.bad()) throw ParseError("read error");
  return out;
}

class Parser {
 public:
  Parser(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const Line& l, const std::string& msg) const {
    throw ParseError(origin_ + ":" + std::to_string(l.number) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(origin_ + ": " + msg); }

  void arity(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n) {
      fail(l, "'" + l.tokens[0] + "' expects " + std::to_string(n - 1) + " arguments, got " +
                  std::to_string(l.tokens.size() - 1));
    }
  }

  std::size_t index(const Line& l, std::size_t pos, std::size_t bound) const {
    const std::string& t = l.tokens[pos];
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9) {
      fail(l, "malformed index '" + t + "'");
    }
    const std::size_t v = std::stoul(t);
    if (v >= bound) fail(l, "index " + t + " out of range (bound " + std::to_string(bound) + ")");
    return v;
  }

  std::size_t count(const Line& l, std::size_t pos) const {
    const std::size_t v = index(l, pos, 1000000000);
    if (v == 0) fail(l, "dimension must be positive");
    return v;
  }

  Scalar value(const Line& l, std::size_t pos, const Field& f) const {
    try {
      return Scalar::parse(l.tokens[pos], f);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(l, e.what());
    }
  }

  Field field(const Line& l) const {
    arity(l, 2);
    try {
      return Field::parse(l.tokens[1]);
    } catch (const Error& e) {
      fail(l, e.what());
    }
  }

  Space shape(const Line& l) const {
    if (l.tokens.size() < 2) fail(l, "'" + l.tokens[0] + "' needs at least one factor");
    std::vector<std::size_t> dims;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) dims.push_back(count(l, i));
    return Space(dims);
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
};

std::string dir_of(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? "." : parent.string();
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::string resolve(const std::string& base, const std::string& rel) {
  const std::filesystem::path p(rel);
  return p.is_absolute() ? rel : (std::filesystem::path(base) / p).string();
}

bool is_builtin_name(const std::string& s) {
  for (const auto& n : builtin_bialgebra_names()) {
    if (n == s) return true;
  }
  return false;
}

}  // namespace

AlgebraFile parse_algebra_file(std::istream& in, const std::string& origin,
                               std::optional<Field> field_override) {
  const Parser P(origin);
  const auto lines = tokenize(in);
  std::optional<Field> declared;
  std::optional<std::size_t> dim;
  std::optional<Space> shape;
  for (const Line& l : lines) {
    const std::string& d = l.tokens[0];
    if (d == "field") {
      if (declared) P.fail(l, "repeated field");
      declared = P.field(l);
    } else if (d == "dim") {
      if (dim) P.fail(l, "repeated dim");
      P.arity(l, 2);
      dim = P.count(l, 1);
    } else if (d == "shape") {
      if (shape) P.fail(l, "repeated shape");
      shape = P.shape(l);
    } else if (d != "mul" && d != "unit" && d != "comul" && d != "counit") {
      P.fail(l, "unknown directive '" + d + "'");
    }
  }
  if (!dim) P.fail("missing dim");
  if (shape && shape->dim() != *dim) P.fail("shape " + shape->to_string() + " does not match dim");

  AlgebraFile f;
  f.field = field_override ? *field_override : declared.value_or(Field::rational());
  f.space = shape ? *shape : Space{*dim};
  const Space& A = f.space;
  const Space F;
  const std::size_t n = *dim;
  std::vector<LinMap::Entry> mul, unit, comul, counit;
  std::set<std::vector<std::size_t>> seen_mul, seen_unit, seen_comul, seen_counit;
  bool has_mul = false, has_unit = false, has_comul = false, has_counit = false;
  auto once = [&](std::set<std::vector<std::size_t>>& seen, const Line& l,
                  std::vector<std::size_t> key) {
    if (!seen.insert(key).second) P.fail(l, "repeated entry for '" + l.tokens[0] + "'");
  };
  for (const Line& l : lines) {
    const std::string& d = l.tokens[0];
    if (d == "mul") {
      P.arity(l, 5);
      const std::size_t i = P.index(l, 1, n), j = P.index(l, 2, n), k = P.index(l, 3, n);
      once(seen_mul, l, {i, j, k});
      mul.push_back({k, i * n + j, P.value(l, 4, f.field)});
      has_mul = true;
    } else if (d == "unit") {
      P.arity(l, 3);
      const std::size_t k = P.index(l, 1, n);
      once(seen_unit, l, {k});
      unit.push_back({k, 0, P.value(l, 2, f.field)});
      has_unit = true;
    } else if (d == "comul") {
      P.arity(l, 5);
      const std::size_t i = P.index(l, 1, n), p = P.index(l, 2, n), q = P.index(l, 3, n);
      once(seen_comul, l, {i, p, q});
      comul.push_back({p * n + q, i, P.value(l, 4, f.field)});
      has_comul = true;
    } else if (d == "counit") {
      P.arity(l, 3);
      const std::size_t i = P.index(l, 1, n);
      once(seen_counit, l, {i});
      counit.push_back({0, i, P.value(l, 2, f.field)});
      has_counit = true;
    }
  }
  if (has_mul) f.mul = LinMap::from_entries(A * A, A, f.field, mul);
  if (has_unit) f.unit = LinMap::from_entries(F, A, f.field, unit);
  if (has_comul) f.comul = LinMap::from_entries(A, A * A, f.field, comul);
  if (has_counit) f.counit = LinMap::from_entries(A, F, f.field, counit);
  return f;
}

AlgebraFile read_algebra_file(const std::string& path, std::optional<Field> field_override) {
  auto in = open(path);
  return parse_algebra_file(in, path, field_override);
}

Algebra to_algebra(const AlgebraFile& f) {
  if (!f.mul) throw ParseError("no mul entries");
  if (!f.unit) throw ParseError("no unit entries");
  return {f.space, *f.mul, *f.unit};
}

Coalgebra to_coalgebra(const AlgebraFile& f) {
  if (!f.comul) throw ParseError("no comul entries");
  if (!f.counit) throw ParseError("no counit entries");
  return {f.space, *f.comul, *f.counit};
}

WeakBialgebra to_weak_bialgebra(const AlgebraFile& f, const std::string& name) {
  return {name, to_algebra(f), to_coalgebra(f)};
}

std::string format_algebra_file(const WeakBialgebra& h) {
  std::ostringstream os;
  const Space& A = h.algebra.space;
  const std::size_t n = A.dim();
  os << "# " << h.name << "\n";
  os << "field " << h.algebra.field().to_string() << "\n";
  os << "dim " << n << "\n";
  if (A.factors() > 1) {
    os << "shape";
    for (std::size_t d : A.shape()) os << " " << d;
    os << "\n";
  }
  const LinMap& m = h.algebra.mul;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t k = m.col_begin(c); k < m.col_end(c); ++k) {
      os << "mul " << c / n << " " << c % n << " " << m.row_at(k) << " " << m.value_at(k) << "\n";
    }
  }
  const LinMap& u = h.algebra.unit;
  for (std::size_t k = u.col_begin(0); k < u.col_end(0); ++k) {
    os << "unit " << u.row_at(k) << " " << u.value_at(k) << "\n";
  }
  const LinMap& d = h.coalgebra.comul;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    for (std::size_t k = d.col_begin(c); k < d.col_end(c); ++k) {
      os << "comul " << c << " " << d.row_at(k) / n << " " << d.row_at(k) % n << " "
         << d.value_at(k) << "\n";
    }
  }
  const LinMap& e = h.coalgebra.counit;
  for (std::size_t c = 0; c < e.cols(); ++c) {
    for (std::size_t k = e.col_begin(c); k < e.col_end(c); ++k) {
      os << "counit " << c << " " << e.value_at(k) << "\n";
    }
  }
  return os.str();
}

LinMap parse_map_file(std::istream& in, const std::string& origin,
                      std::optional<Field> field_override) {
  const Parser P(origin);
  const auto lines = tokenize(in);
  std::optional<Field> declared;
  std::optional<Space> dom, cod;
  for (const Line& l : lines) {
    const std::string& d = l.tokens[0];
    if (d == "field") {
      if (declared) P.fail(l, "repeated field");
      declared = P.field(l);
    } else if (d == "domain" || d == "codomain") {
      auto& slot = d == "domain" ? dom : cod;
      if (slot) P.fail(l, "repeated " + d);
      // "domain 1" with a single unit factor is the base field
      slot = P.shape(l);
      if (slot->dim() == 1) slot = Space();
    } else if (d != "entry") {
      P.fail(l, "unknown directive '" + d + "'");
    }
  }
  if (!dom) P.fail("missing domain");
  if (!cod) P.fail("missing codomain");
  const Field field = field_override ? *field_override : declared.value_or(Field::rational());
  std::vector<LinMap::Entry> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line& l : lines) {
    if (l.tokens[0] != "entry") continue;
    P.arity(l, 4);
    const std::size_t r = P.index(l, 1, cod->dim());
    const std::size_t c = P.index(l, 2, dom->dim());
    if (!seen.insert({r, c}).second) P.fail(l, "repeated entry");
    entries.push_back({r, c, P.value(l, 3, field)});
  }
  return LinMap::from_entries(*dom, *cod, field, entries);
}

LinMap read_map_file(const std::string& path, std::optional<Field> field_override) {
  auto in = open(path);
  return parse_map_file(in, path, field_override);
}

std::string format_map_file(const LinMap& f) {
  std::ostringstream os;
  os << "field " << f.field().to_string() << "\n";
  auto shape = [&](const char* key, const Space& s) {
    os << key;
    if (s.is_field()) os << " 1";
    for (std::size_t d : s.shape()) os << " " << d;
    os << "\n";
  };
  shape("domain", f.domain());
  shape("codomain", f.codomain());
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (std::size_t k = f.col_begin(c); k < f.col_end(c); ++k) {
      os << "entry " << f.row_at(k) << " " << c << " " << f.value_at(k) << "\n";
    }
  }
  return os.str();
}

WeakBialgebra load_bialgebra(const std::string& source, std::optional<Field> field_override) {
  const std::string prefix = "builtin:";
  const Field field = field_override.value_or(Field::rational());
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    if (!is_builtin_name(name)) throw ParseError("unknown builtin '" + name + "'");
    return builtin_bialgebra(name, field);
  }
  if (is_builtin_name(source) && !std::filesystem::exists(source)) {
    return builtin_bialgebra(source, field);
  }
  if (!std::filesystem::exists(source)) {
    throw ParseError("no builtin or file named '" + source + "'");
  }
  return to_weak_bialgebra(read_algebra_file(source, field_override),
                           std::filesystem::path(source).stem().string());
}

WdlNObject parse_manifest(std::istream& in, const std::string& origin, const std::string& base_dir,
                          std::optional<Field> field_override) {
  const Parser P(origin);
  const auto lines = tokenize(in);
  std::optional<Field> declared;
  for (const Line& l : lines) {
    if (l.tokens[0] == "field") {
      if (declared) P.fail(l, "repeated field");
      declared = P.field(l);
    }
  }
  const std::optional<Field> field = field_override ? field_override : declared;

  for (const Line& l : lines) {
    if (l.tokens[0] != "spinchain") continue;
    if (lines.size() > (declared ? 2u : 1u)) P.fail(l, "spinchain excludes other directives");
    if (l.tokens.size() != 3 && l.tokens.size() != 4) P.fail(l, "spinchain NAME N [parity]");
    if (l.tokens.size() == 4 && l.tokens[3] != "parity") P.fail(l, "expected 'parity'");
    const std::string src = is_builtin_name(l.tokens[1]) || l.tokens[1].rfind("builtin:", 0) == 0
                                ? l.tokens[1]
                                : resolve(base_dir, l.tokens[1]);
    const std::size_t n = P.index(l, 2, 64);
    try {
      return build_spin_chain({load_bialgebra(src, field), n, l.tokens.size() == 4});
    } catch (const AxiomFailure& e) {
      P.fail(l, e.what());
    } catch (const ParseError& e) {
      P.fail(l, e.what());
    }
  }

  std::map<std::size_t, Demimonad> monads;
  for (const Line& l : lines) {
    if (l.tokens[0] != "monad") continue;
    P.arity(l, 3);
    const std::size_t i = P.index(l, 1, 64);
    if (monads.count(i)) P.fail(l, "repeated monad " + std::to_string(i));
    const std::string& src = l.tokens[2];
    if (src.rfind("builtin:", 0) == 0) {
      try {
        monads.emplace(i, Demimonad::from_algebra(load_bialgebra(src, field).algebra));
      } catch (const ParseError& e) {
        P.fail(l, e.what());
      }
    } else {
      const Algebra a = to_algebra(read_algebra_file(resolve(base_dir, src), field));
      monads.emplace(i, Demimonad::make(a.space, a.mul, a.unit));
    }
  }
  if (monads.empty()) P.fail("no monads");
  const std::size_t n = monads.size();
  if (monads.rbegin()->first != n - 1) P.fail("monads must be numbered 0.." + std::to_string(n - 1));
  std::vector<Demimonad> ms;
  for (auto& [i, m] : monads) ms.push_back(m);
  WdlNObject o = flip_object(ms);
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const Line& l : lines) {
    const std::string& d = l.tokens[0];
    if (d == "field" || d == "monad") continue;
    if (d != "law") P.fail(l, "unknown directive '" + d + "'");
    P.arity(l, 4);
    const std::size_t i = P.index(l, 1, n);
    const std::size_t j = P.index(l, 2, n);
    if (i >= j) P.fail(l, "law indices must satisfy i < j");
    if (!given.insert({i, j}).second) P.fail(l, "repeated law");
    if (l.tokens[3] == "flip") continue;
    const LinMap f = read_map_file(resolve(base_dir, l.tokens[3]), field);
    const Space dom = o.monads[j].space * o.monads[i].space;
    const Space cod = o.monads[i].space * o.monads[j].space;
    if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
      P.fail(l, "law map has size " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                    ", expected " + std::to_string(cod.dim()) + "x" + std::to_string(dom.dim()));
    }
    o.laws[i][j] = f.reshape(dom, cod);
  }
  if (given.size() != n * (n - 1) / 2) P.fail("every pair i < j needs a law");
  return o;
}

WdlNObject read_manifest(const std::string& path, std::optional<Field> field_override) {
  auto in = open(path);
  return parse_manifest(in, path, dir_of(path), field_override);
}

}  // namespace wreath
