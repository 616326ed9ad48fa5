#include "wreath/algebra.hpp"

namespace wreath {

namespace {

bool shapes_ok(Report& r, const char* what, const LinMap& f, std::size_t rows, std::size_t cols) {
  const bool ok = f.rows() == rows && f.cols() == cols;
  r.add(std::string("shape of ") + what, ok,
        std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " expected " +
            std::to_string(rows) + "x" + std::to_string(cols));
  return ok;
}

}  // namespace

Demimonad Demimonad::make(Space space, LinMap mul, LinMap unit) {
  LinMap idem = compose(mul, whisker(space, unit, Space()));
  idem = idem.reshape(space, space);
  return {std::move(space), std::move(mul), std::move(unit), std::move(idem)};
}

Demimonad Demimonad::from_algebra(const Algebra& a) {
  return {a.space, a.mul, a.unit, LinMap::identity(a.space, a.field())};
}

Algebra trivial_algebra(Field field) {
  return {Space(), LinMap::identity(Space(), field), LinMap::identity(Space(), field)};
}

Demimonad trivial_demimonad(Field field) { return Demimonad::from_algebra(trivial_algebra(field)); }

Report check_algebra(const Algebra& a) {
  Report r("algebra");
  const std::size_t n = a.space.dim();
  if (!shapes_ok(r, "mul", a.mul, n, n * n) || !shapes_ok(r, "unit", a.unit, n, 1)) return r;
  const Space& A = a.space;
  const LinMap id = LinMap::identity(A, a.field());
  r.add_equal("associativity", compose(a.mul, whisker(Space(), a.mul, A)),
              compose(a.mul, whisker(A, a.mul, Space())));
  r.add_equal("left unit", compose(a.mul, tensor(a.unit, id)), id);
  r.add_equal("right unit", compose(a.mul, tensor(id, a.unit)), id);
  return r;
}

Report check_coalgebra(const Coalgebra& c) {
  Report r("coalgebra");
  const std::size_t n = c.space.dim();
  if (!shapes_ok(r, "comul", c.comul, n * n, n) || !shapes_ok(r, "counit", c.counit, 1, n)) {
    return r;
  }
  const Space& C = c.space;
  const LinMap id = LinMap::identity(C, c.field());
  r.add_equal("coassociativity", compose(whisker(Space(), c.comul, C), c.comul),
              compose(whisker(C, c.comul, Space()), c.comul));
  r.add_equal("left counit", compose(tensor(c.counit, id), c.comul), id);
  r.add_equal("right counit", compose(tensor(id, c.counit), c.comul), id);
  return r;
}

Report check_demimonad(const Demimonad& d) {
  Report r("demimonad");
  const std::size_t n = d.space.dim();
  if (!shapes_ok(r, "mul", d.mul, n, n * n) || !shapes_ok(r, "unit", d.unit, n, 1) ||
      !shapes_ok(r, "idem", d.idem, n, n)) {
    return r;
  }
  const Space& T = d.space;
  const Space F;
  const LinMap mu_ut = compose(d.mul, whisker(F, d.unit, T));
  const LinMap mu_tu = compose(d.mul, whisker(T, d.unit, F));
  r.add_equal("associativity", compose(d.mul, whisker(F, d.mul, T)),
              compose(d.mul, whisker(T, d.mul, F)));
  r.add_equal("unit sides agree", mu_ut, mu_tu);
  r.add_equal("unit square", compose(d.mul, tensor(d.unit, d.unit)), d.unit);
  r.add_equal("unit absorption",
              chain({d.mul, whisker(F, d.mul, T), whisker(F, d.unit, T * T)}), d.mul);
  r.add_equal("idempotent matches", d.idem, mu_tu);
  r.add_equal("idempotent", compose(d.idem, d.idem), d.idem);
  return r;
}

std::pair<LinMap, LinMap> split_idempotent(const LinMap& e) {
  const Splitting s = split_idempotent(e.to_dense());
  if (s.iota.cols() == 0) throw NotIdempotent("cannot split the zero idempotent");
  const Space img{s.iota.cols()};
  return {LinMap::from_dense(s.iota, img, e.codomain()),
          LinMap::from_dense(s.pi, e.domain(), img)};
}

SplitDemimonad split_demimonad(const Demimonad& d) {
  const Report r = check_demimonad(d);
  if (!r.ok()) {
    throw DemimonadAxiomFailure("demimonad axiom '" + r.failures().front().name + "' fails");
  }
  auto [iota, pi] = split_idempotent(d.idem);
  const Space img = iota.domain();
  Algebra alg{img, chain({pi, d.mul, tensor(iota, iota)}), compose(pi, d.unit)};
  return {std::move(alg), std::move(iota), std::move(pi)};
}

}  // namespace wreath
