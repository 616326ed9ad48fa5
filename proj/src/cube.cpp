#include "wreath/cube.hpp"

#include "wreath/errors.hpp"
#include "wreath/parallel.hpp"

namespace wreath {

namespace {

const Space kF;

Subset bit(std::size_t i) { return Subset{1} << i; }

std::string pair_tag(Subset p, Subset q) { return subset_string(p) + "," + subset_string(q); }

}  // namespace

std::vector<std::size_t> members(Subset p) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; p >> i; ++i) {
    if (p & bit(i)) m.push_back(i);
  }
  return m;
}

std::string subset_string(Subset p) {
  std::string s = "{";
  for (std::size_t i : members(p)) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

const LinMap& MonadCube::edge(Subset p, std::size_t i) const {
  if (i >= size || p > full() || (p & bit(i))) {
    throw IndexOutOfRange("no edge from " + subset_string(p) + " adding " + std::to_string(i));
  }
  return edges[p * size + i];
}

MonadCube build_cube(const WdlNObject& o) {
  if (o.size() == 0 || o.size() > 16) {
    throw PreconditionFailure("cube needs between 1 and 16 monads");
  }
  MonadCube c;
  c.size = o.size();
  const Subset count = c.full() + 1;
  c.vertex.assign(count, trivial_demimonad(o.field()));
  parallel_for(count - 1, [&](std::size_t k) {
    const Subset p = static_cast<Subset>(k + 1);
    c.vertex[p] = iterated_wreath(o.restrict(members(p)));
  });
  c.edges.assign(static_cast<std::size_t>(count) * c.size, LinMap());
  parallel_for(count, [&](std::size_t k) {
    const Subset p = static_cast<Subset>(k);
    for (std::size_t i = 0; i < c.size; ++i) {
      if (p & bit(i)) continue;
      Space left;
      Space right;
      for (std::size_t m : members(p)) {
        (m < i ? left : right) = (m < i ? left : right) * o.monads[m].space;
      }
      const Demimonad& to = c.vertex[p | bit(i)];
      c.edges[p * c.size + i] = compose(to.idem, whisker(left, o.monads[i].unit, right))
                                    .reshape(c.vertex[p].space, to.space);
    }
  });
  return c;
}

MonadMorphism edge_morphism(const MonadCube& c, Subset p, std::size_t i) {
  const LinMap& phi = c.edge(p, i);
  const Demimonad& src = c.at(p | bit(i));
  const Demimonad& tgt = c.at(p);
  return {src, tgt, kF, LinMap::identity(kF, phi.field()),
          phi.reshape(tgt.space * kF, kF * src.space)};
}

Report verify_cube(const MonadCube& c) {
  Report r("monad cube");
  std::size_t edges = 0;
  std::size_t faces = 0;
  for (Subset p = 0; p <= c.full(); ++p) {
    r.merge("vertex " + subset_string(p), check_demimonad(c.at(p)));
  }
  for (Subset p = 0; p <= c.full(); ++p) {
    for (std::size_t i = 0; i < c.size; ++i) {
      if (p & bit(i)) continue;
      r.merge("edge " + subset_string(p) + "+" + std::to_string(i),
              check_monad_morphism(edge_morphism(c, p, i)));
      ++edges;
    }
  }
  for (Subset p = 0; p <= c.full(); ++p) {
    for (std::size_t i = 0; i < c.size; ++i) {
      for (std::size_t j = i + 1; j < c.size; ++j) {
        if (p & (bit(i) | bit(j))) continue;
        r.add_equal("face " + subset_string(p) + "+" + std::to_string(i) + "," + std::to_string(j),
                    compose(c.edge(p | bit(j), i), c.edge(p, j)),
                    compose(c.edge(p | bit(i), j), c.edge(p, i)));
        ++faces;
      }
    }
  }
  r.set("vertices", static_cast<std::size_t>(c.full()) + 1);
  r.set("edges", edges);
  r.set("faces", faces);
  return r;
}

LinMap cube_path(const MonadCube& c, Subset p, Subset q) {
  if (p & q) throw PreconditionFailure("cube path between overlapping subsets");
  LinMap acc = LinMap::identity(c.at(p).space, c.at(p).field());
  Subset cur = p;
  for (std::size_t i : members(q)) {
    acc = compose(c.edge(cur, i), acc);
    cur |= bit(i);
  }
  return acc.reshape(c.at(p).space, c.at(cur).space);
}

std::vector<std::pair<Subset, Subset>> ordered_pairs(std::size_t size) {
  std::vector<std::pair<Subset, Subset>> out;
  const Subset full = (Subset{1} << size) - 1;
  for (Subset p = 1; p <= full; ++p) {
    for (Subset q = 1; q <= full; ++q) {
      if (p & q) continue;
      if (members(p).back() < members(q).front()) out.emplace_back(p, q);
    }
  }
  return out;
}

LinMap factorization_pi(const MonadCube& c, Subset p, Subset q) {
  const Demimonad& pq = c.at(p | q);
  return compose(pq.mul, tensor(cube_path(c, p, q), cube_path(c, q, p)))
      .reshape(c.at(p).space * c.at(q).space, pq.space);
}

FactorizationData canonical_factorization(const WdlNObject& o, bool with_target) {
  FactorizationData f;
  f.cube = build_cube(o);
  for (auto [p, q] : ordered_pairs(o.size())) {
    const Demimonad& pq = f.cube.at(p | q);
    f.iota[{p, q}] = pq.idem.reshape(pq.space, f.cube.at(p).space * f.cube.at(q).space);
  }
  if (with_target) {
    const SplitDemimonad s = split_demimonad(f.cube.at(f.cube.full()));
    f.target = Demimonad::from_algebra(s.alg);
    f.to_top = s.iota;
    f.from_top = s.pi;
  }
  return f;
}

Report nary_factorization_check(const FactorizationData& f) {
  Report r("n-ary factorization");
  const MonadCube& c = f.cube;
  auto S = [&](Subset p) -> const Space& { return c.at(p).space; };
  auto E = [&](Subset p) -> const LinMap& { return c.at(p).idem; };
  auto M = [&](Subset p) -> const LinMap& { return c.at(p).mul; };
  auto P = [&](Subset p, Subset q) { return cube_path(c, p, q); };
  auto I = [&](Subset p, Subset q) -> const LinMap& {
    auto it = f.iota.find({p, q});
    if (it == f.iota.end()) {
      throw PreconditionFailure("missing section iota_" + pair_tag(p, q));
    }
    return it->second;
  };
  auto id = [&](Subset p) { return LinMap::identity(S(p), c.at(p).field()); };

  const Demimonad& bottom = c.at(0);
  r.add("(a) bottom vertex trivial",
        bottom.space.dim() == 1 && bottom.mul.is_identity() && bottom.unit.is_identity(),
        bottom.space.dim() == 1 ? "structure maps are not the identity"
                                : "dimension " + std::to_string(bottom.space.dim()));
  if (f.target) {
    const Demimonad& t = *f.target;
    const Demimonad& top = c.at(c.full());
    r.add_equal("(a) from_top.to_top", compose(f.from_top, f.to_top), t.idem);
    r.add_equal("(a) to_top.from_top", compose(f.to_top, f.from_top), top.idem);
    r.add_equal("(a) to_top multiplicative", chain({f.to_top, t.mul, tensor(t.idem, t.idem)}),
                chain({top.mul, tensor(f.to_top, f.to_top), tensor(t.idem, t.idem)}));
    r.add_equal("(a) to_top unital", compose(f.to_top, t.unit), top.unit);
  }

  const auto pairs = ordered_pairs(c.size);
  for (auto [p, q] : pairs) {
    const std::string tag = "(b) " + pair_tag(p, q);
    const Subset pq = p | q;
    const LinMap& io = I(p, q);
    r.add_equal(tag + " pi.iota", compose(factorization_pi(c, p, q), io), E(pq));
    r.add_equal(tag + " iota normalized", chain({tensor(E(p), E(q)), io, E(pq)}), io);
    r.add_equal(tag + " left module",
                chain({io, M(pq), tensor(P(p, q), id(pq)), tensor(E(p), E(pq))}),
                chain({tensor(M(p), id(q)), tensor(id(p), io), tensor(E(p), E(pq))}));
    r.add_equal(tag + " right module",
                chain({io, M(pq), tensor(id(pq), P(q, p)), tensor(E(pq), E(q))}),
                chain({tensor(id(p), M(q)), tensor(io, id(q)), tensor(E(pq), E(q))}));
  }

  std::size_t triples = 0;
  for (auto [p, q] : pairs) {
    for (auto [q2, rr] : pairs) {
      if (q2 != q) continue;
      ++triples;
      const Subset pq = p | q;
      const Subset qr = q | rr;
      const Subset pr = p | rr;
      const Subset all = p | q | rr;
      const std::string tag = "(c) " + subset_string(p) + "," + subset_string(q) + "," +
                              subset_string(rr);
      r.add_equal(tag + " coassociativity", compose(tensor(id(p), I(q, rr)), I(p, qr)),
                  compose(tensor(I(p, q), id(rr)), I(pq, rr)));
      r.add_equal(
          tag + " first hexagon",
          chain({tensor(id(p), I(q, rr)), I(p, qr), M(all), tensor(P(qr, p), P(p, qr)),
                 tensor(E(qr), E(p))}),
          chain({tensor(I(p, q), id(rr)), tensor(M(pq), id(rr)),
                 tensor({P(q, p), P(p, q), id(rr)}), tensor(id(q), I(p, rr)),
                 tensor(id(q), M(pr)), tensor({id(q), P(rr, p), P(p, rr)}),
                 tensor(I(q, rr), id(p)), tensor(E(qr), E(p))}));
      r.add_equal(
          tag + " second hexagon",
          chain({tensor(I(p, q), id(rr)), I(pq, rr), M(all), tensor(P(rr, pq), P(pq, rr)),
                 tensor(E(rr), E(pq))}),
          chain({tensor(id(p), I(q, rr)), tensor(id(p), M(qr)),
                 tensor({id(p), P(rr, q), P(q, rr)}), tensor(I(p, rr), id(q)),
                 tensor(M(pr), id(q)), tensor({P(rr, p), P(p, rr), id(q)}),
                 tensor(id(rr), I(p, q)), tensor(E(rr), E(pq))}));
    }
  }
  r.set("pairs", pairs.size());
  r.set("triples", triples);
  return r;
}

std::vector<MonadMorphism> cube_one_cell(const WdlNOneCell& c, const WdlNObject& o,
                                         const WdlNObject& o2) {
  const Subset count = Subset{1} << o.size();
  std::vector<MonadMorphism> out;
  const Demimonad triv = trivial_demimonad(o.field());
  out.push_back({triv, triv, c.carrier, c.carrier_idem,
                 c.carrier_idem.reshape(kF * c.carrier, c.carrier * kF)});
  for (Subset p = 1; p < count; ++p) {
    const auto m = members(p);
    out.push_back(iterated_one_cell(restrict_one_cell(c, m), o.restrict(m), o2.restrict(m)));
  }
  return out;
}

Report check_cube_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2) {
  Report r("cube 1-cell");
  const auto xs = cube_one_cell(c, o, o2);
  const MonadCube a = build_cube(o);
  const MonadCube b = build_cube(o2);
  const Space& v = c.carrier;
  for (Subset p = 0; p <= a.full(); ++p) {
    r.merge("vertex " + subset_string(p), check_monad_morphism(xs[p]));
  }
  for (Subset p = 0; p <= a.full(); ++p) {
    for (std::size_t i = 0; i < a.size; ++i) {
      if (p & bit(i)) continue;
      r.add_equal("edge " + subset_string(p) + "+" + std::to_string(i),
                  compose(whisker(v, a.edge(p, i), kF), xs[p].xi),
                  compose(xs[p | bit(i)].xi, whisker(kF, b.edge(p, i), v)));
    }
  }
  for (std::size_t i = 0; i < o.size(); ++i) {
    r.add_equal("singleton " + std::to_string(i) + " recovers xi_" + std::to_string(i),
                xs[bit(i)].xi, c.xi[i]);
  }
  return r;
}

}  // namespace wreath
