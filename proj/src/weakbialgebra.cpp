#include "wreath/weakbialgebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wreath {

namespace {

using Entries = std::vector<LinMap::Entry>;

Scalar one(const Field& f) { return Scalar::in(f, 1); }

WeakBialgebra assemble(std::string name, const Space& H, const Field& f, const Entries& mul,
                       const Entries& unit, const Entries& comul, const Entries& counit) {
  const Space F;
  Algebra a{H, LinMap::from_entries(H * H, H, f, mul), LinMap::from_entries(F, H, f, unit)};
  Coalgebra c{H, LinMap::from_entries(H, H * H, f, comul), LinMap::from_entries(H, F, f, counit)};
  return {std::move(name), std::move(a), std::move(c)};
}

// Grouplike coalgebra: comul(e_i) = e_i (x) e_i, counit(e_i) = 1.
void grouplike(std::size_t n, const Field& f, Entries& comul, Entries& counit) {
  for (std::size_t i = 0; i < n; ++i) {
    comul.push_back({i * n + i, i, one(f)});
    counit.push_back({0, i, one(f)});
  }
}

}  // namespace

bool strict_unit(const WeakBialgebra& h) {
  const auto& u = h.algebra.unit;
  return compose(h.coalgebra.comul, u) == tensor(u, u);
}

bool strict_counit(const WeakBialgebra& h) {
  const auto& e = h.coalgebra.counit;
  return compose(e, h.algebra.mul) == tensor(e, e);
}

Report check_weak_bialgebra(const WeakBialgebra& h) {
  Report r("weak bialgebra " + h.name);
  r.merge("algebra", check_algebra(h.algebra));
  r.merge("coalgebra", check_coalgebra(h.coalgebra));
  if (!r.ok()) return r;
  const Space& H = h.space();
  const Space F;
  const Field& f = h.field();
  const LinMap& mu = h.algebra.mul;
  const LinMap& eta = h.algebra.unit;
  const LinMap& delta = h.coalgebra.comul;
  const LinMap& eps = h.coalgebra.counit;
  const LinMap mid_flip = whisker(H, flip(H, H, f), H);

  r.add_equal("multiplicativity", compose(delta, mu),
              chain({tensor(mu, mu), mid_flip, tensor(delta, delta)}));

  const LinMap delta2_eta = chain({whisker(F, delta, H), delta, eta});
  const LinMap dd_ee = compose(tensor(delta, delta), tensor(eta, eta));
  const LinMap mid_mu = whisker(H, mu, H);
  r.add_equal("weak unit (straight)", delta2_eta, compose(mid_mu, dd_ee));
  r.add_equal("weak unit (crossed)", delta2_eta, chain({mid_mu, mid_flip, dd_ee}));

  const LinMap eps_mu2 = chain({eps, mu, whisker(F, mu, H)});
  const LinMap ee_mm = compose(tensor(eps, eps), tensor(mu, mu));
  const LinMap mid_delta = whisker(H, delta, H);
  r.add_equal("weak counit (straight)", eps_mu2, compose(ee_mm, mid_delta));
  r.add_equal("weak counit (crossed)", eps_mu2, chain({ee_mm, mid_flip, mid_delta}));

  r.set("dim", h.dim());
  r.set("strict unit", strict_unit(h));
  r.set("strict counit", strict_counit(h));
  return r;
}

DualPair dual(const WeakBialgebra& h) {
  const Report hr = check_weak_bialgebra(h);
  if (!hr.ok()) {
    throw AxiomFailure(h.name + ": " + hr.failures().front().name + " fails, no dual formed");
  }
  const Space& H = h.space();
  const Space F;
  const Field& f = h.field();
  WeakBialgebra hh;
  hh.name = h.name + "^";
  hh.algebra = {H, h.coalgebra.comul.transpose(), h.coalgebra.counit.transpose()};
  hh.coalgebra = {H, h.algebra.mul.transpose(), h.algebra.unit.transpose()};
  const Report dr = check_weak_bialgebra(hh);
  if (!dr.ok()) {
    throw AxiomFailure(hh.name + ": " + dr.failures().front().name + " fails");
  }
  Entries ev;
  for (std::size_t i = 0; i < H.dim(); ++i) ev.push_back({0, i * H.dim() + i, one(f)});
  return {h, std::move(hh), {LinMap::from_entries(H * H, F, f, ev)}};
}

Report check_pairing(const DualPair& p) {
  Report r("pairing " + p.h.name);
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  const Space F;
  const Field& f = p.h.field();
  const LinMap& ev = p.ev.ev;
  Matrix square(Hh.dim(), H.dim(), f);
  for (std::size_t a = 0; a < Hh.dim(); ++a) {
    for (std::size_t b = 0; b < H.dim(); ++b) square.set(a, b, ev.at(0, a * H.dim() + b));
  }
  const std::size_t rk = rank(square);
  r.add("nondegenerate", rk == H.dim() && rk == Hh.dim(),
        "rank " + std::to_string(rk) + " of " + std::to_string(H.dim()));
  const LinMap ev_mid = whisker(Hh, ev, H);
  r.add_equal("comul_hat transposes mul",
              chain({ev, whisker(Hh, p.h.algebra.mul, F), whisker(Hh, flip(H, H, f), F)}),
              chain({ev, ev_mid, whisker(F, p.hhat.coalgebra.comul, H * H)}));
  r.add_equal("counit_hat transposes unit", compose(ev, whisker(Hh, p.h.algebra.unit, F)),
              p.hhat.coalgebra.counit);
  r.add_equal("mul_hat transposes comul",
              chain({ev, whisker(F, p.hhat.algebra.mul, H), whisker(F, flip(Hh, Hh, f), H)}),
              chain({ev, ev_mid, whisker(Hh * Hh, p.h.coalgebra.comul, F)}));
  r.add_equal("unit_hat transposes counit", compose(ev, whisker(F, p.hhat.algebra.unit, H)),
              p.h.coalgebra.counit);
  return r;
}

LinMap eps_bar_s(const WeakBialgebra& h) {
  const Space& H = h.space();
  const Space F;
  return chain({whisker(H, h.coalgebra.counit, F), whisker(H, h.algebra.mul, F),
                whisker(F, h.coalgebra.comul, H), whisker(F, h.algebra.unit, H)})
      .reshape(H, H);
}

Report check_eps_bar_s(const WeakBialgebra& h) {
  Report r("eps_bar_s " + h.name);
  const Space& H = h.space();
  const Space F;
  const LinMap e = eps_bar_s(h);
  r.add_equal("idempotent", compose(e, e), e);
  r.add_equal("absorbs into mul",
              chain({whisker(H, h.coalgebra.counit, F), whisker(H, h.algebra.mul, F),
                     whisker(F, h.coalgebra.comul, H)}),
              compose(h.algebra.mul, whisker(H, e, F)));
  r.add_equal("factors comul",
              chain({whisker(H, h.algebra.mul, F), whisker(F, h.coalgebra.comul, H),
                     whisker(F, h.algebra.unit, H)}),
              compose(whisker(F, e, H), h.coalgebra.comul));
  return r;
}

LinMap left_action_xi(const DualPair& p) {
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  return compose(whisker(Hh, p.ev.ev, Space()), whisker(Space(), p.hhat.coalgebra.comul, H))
      .reshape(Hh * H, Hh);
}

LinMap right_action_zeta(const DualPair& p) {
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  return compose(whisker(Space(), p.ev.ev, H), whisker(Hh, p.h.coalgebra.comul, Space()))
      .reshape(Hh * H, H);
}

Report check_actions(const DualPair& p) {
  Report r("actions " + p.h.name);
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  const Space F;
  const Field& f = p.h.field();
  const LinMap xi = left_action_xi(p);
  const LinMap zeta = right_action_zeta(p);
  r.add_equal("xi associative", compose(xi, whisker(F, xi, H)),
              chain({xi, whisker(Hh, p.h.algebra.mul, F), whisker(Hh, flip(H, H, f), F)}));
  r.add_equal("xi unital", compose(xi, whisker(Hh, p.h.algebra.unit, F)),
              LinMap::identity(Hh, f));
  r.add_equal("zeta associative", compose(zeta, whisker(Hh, zeta, F)),
              chain({zeta, whisker(F, p.hhat.algebra.mul, H), whisker(F, flip(Hh, Hh, f), H)}));
  r.add_equal("zeta unital", compose(zeta, whisker(F, p.hhat.algebra.unit, H)),
              LinMap::identity(H, f));
  return r;
}

LinMap canonical_lambda(const DualPair& p) {
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  const Field& f = p.h.field();
  return chain({whisker(Hh, p.ev.ev, H), tensor(p.hhat.coalgebra.comul, p.h.coalgebra.comul),
                flip(H, Hh, f)})
      .reshape(H * Hh, Hh * H);
}

LinMap canonical_lambda_hat(const DualPair& p) {
  const Space& H = p.h.space();
  const Space& Hh = p.hhat.space();
  const Field& f = p.h.field();
  return chain({whisker(H, p.ev.ev, Hh), whisker(H, flip(H, Hh, f), Hh),
                tensor(p.h.coalgebra.comul, p.hhat.coalgebra.comul), flip(Hh, H, f)})
      .reshape(Hh * H, H * Hh);
}

WeakBialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, Field field,
                            std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("multiplication table is not square");
    for (auto v : row) {
      if (v >= n) throw NotAGroup("multiplication table entry out of range");
    }
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool is_identity = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != j || table[j][i] != j) is_identity = false;
    }
    if (is_identity) e = i;
  }
  if (e == n) throw NotAGroup("no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw NotAGroup("multiplication is not associative");
        }
      }
    }
    if (std::none_of(table[a].begin(), table[a].end(), [e](auto v) { return v == e; })) {
      throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
  }
  const Space H{n};
  Entries mul, unit, comul, counit;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul.push_back({table[a][b], a * n + b, one(field)});
  }
  unit.push_back({e, 0, one(field)});
  grouplike(n, field, comul, counit);
  return assemble(std::move(name), H, field, mul, unit, comul, counit);
}

WeakBialgebra cyclic_group_algebra(std::size_t n, Field field) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return group_algebra(t, field, "F[Z/" + std::to_string(n) + "]");
}

WeakBialgebra symmetric_group_s3_algebra(Field field) {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return group_algebra(t, field, "F[S3]");
}

WeakBialgebra pair_groupoid_algebra(std::size_t k, Field field) {
  if (k == 0) throw Error("pair groupoid needs at least one object");
  const std::size_t n = k * k;
  const Space H{n};
  Entries mul, unit, comul, counit;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) mul.push_back({i * k + l, (i * k + j) * n + (j * k + l), one(field)});
    }
    unit.push_back({i * k + i, 0, one(field)});
  }
  grouplike(n, field, comul, counit);
  return assemble("M" + std::to_string(k), H, field, mul, unit, comul, counit);
}

WeakBialgebra trivial_bialgebra(Field field) {
  const Space F;
  const LinMap id = LinMap::identity(F, field);
  return {"F", {F, id, id}, {F, id, id}};
}

std::vector<std::string> builtin_bialgebra_names() {
  return {"f", "z2", "z3", "s3", "m1", "m2", "m3"};
}

WeakBialgebra builtin_bialgebra(const std::string& name, Field field) {
  if (name == "f" || name == "trivial") return trivial_bialgebra(field);
  if (name == "z2") return cyclic_group_algebra(2, field);
  if (name == "z3") return cyclic_group_algebra(3, field);
  if (name == "s3") return symmetric_group_s3_algebra(field);
  if (name.size() == 2 && name[0] == 'm' && name[1] >= '1' && name[1] <= '3') {
    return pair_groupoid_algebra(static_cast<std::size_t>(name[1] - '0'), field);
  }
  throw Error("unknown builtin bialgebra '" + name + "'");
}

std::vector<WeakBialgebra> example_zoo(Field field) {
  std::vector<WeakBialgebra> zoo;
  for (const auto& n : builtin_bialgebra_names()) zoo.push_back(builtin_bialgebra(n, field));
  return zoo;
}

std::vector<WeakBialgebra> mutated_bialgebras(Field field) {
  std::vector<WeakBialgebra> out;
  const Space F;

  WeakBialgebra a = cyclic_group_algebra(2, field);
  a.name = "F[Z/2] with zero counit";
  a.coalgebra.counit = LinMap(a.space(), F, field);
  out.push_back(a);

  WeakBialgebra b = cyclic_group_algebra(2, field);
  b.name = "F[Z/2] with unit at the generator";
  b.algebra.unit = LinMap::from_entries(F, b.space(), field, {{1, 0, one(field)}});
  out.push_back(b);

  WeakBialgebra c = pair_groupoid_algebra(2, field);
  c.name = "M2 with twisted comultiplication";
  {
    Entries comul;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) comul.push_back({(i * 2 + j) * 4 + (j * 2 + i), i * 2 + j, one(field)});
    }
    c.coalgebra.comul = LinMap::from_entries(c.space(), c.space() * c.space(), field, comul);
  }
  out.push_back(c);

  // Group multiplication paired with the convolution coproduct of the
  // function algebra: a valid algebra and coalgebra, but not multiplicative.
  WeakBialgebra d = cyclic_group_algebra(2, field);
  d.name = "F[Z/2] with convolution comultiplication";
  d.coalgebra.comul = d.algebra.mul.transpose();
  d.coalgebra.counit = d.algebra.unit.transpose();
  out.push_back(d);

  WeakBialgebra e = cyclic_group_algebra(3, field);
  e.name = "F[Z/3] with g*g doubled";
  {
    Entries mul;
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        mul.push_back({(x + y) % 3, x * 3 + y, Scalar::in(field, x == 1 && y == 1 ? 2 : 1)});
      }
    }
    e.algebra.mul = LinMap::from_entries(e.space() * e.space(), e.space(), field, mul);
  }
  out.push_back(e);
  return out;
}

}  // namespace wreath
