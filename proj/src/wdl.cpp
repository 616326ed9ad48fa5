#include "wreath/wdl.hpp"

namespace wreath {

namespace {

const Space kF;

LinMap lam(const WeakDistributiveLaw& w) {
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  if (w.lambda.cols() != T.dim() * S.dim() || w.lambda.rows() != S.dim() * T.dim()) {
    throw ShapeMismatch("law of size " + std::to_string(w.lambda.rows()) + "x" +
                        std::to_string(w.lambda.cols()) + " does not map t(x)s to s(x)t");
  }
  return w.lambda.reshape(T * S, S * T);
}

}  // namespace

WeakDistributiveLaw flip_law(const Demimonad& t, const Demimonad& s) {
  return {t, s, flip(t.space, s.space, t.field())};
}

LinMap lambda_bar_left(const WeakDistributiveLaw& w) {
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  return chain({whisker(S, w.t.mul, kF), whisker(kF, lam(w), T), whisker(kF, w.t.unit, S * T)})
      .reshape(S * T, S * T);
}

LinMap lambda_bar_right(const WeakDistributiveLaw& w) {
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  return chain({whisker(kF, w.s.mul, T), whisker(S, lam(w), kF), whisker(S * T, w.s.unit, kF)})
      .reshape(S * T, S * T);
}

LinMap lambda_bar(const WeakDistributiveLaw& w) {
  LinMap left = lambda_bar_left(w);
  const LinMap right = lambda_bar_right(w);
  const std::string wit = equality_witness(left, right);
  if (!wit.empty()) throw PathsDisagree("the two lambda_bar paths differ: " + wit);
  return left;
}

Report check_wdl(const WeakDistributiveLaw& w) {
  Report r("weak distributive law");
  const LinMap l = lam(w);
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  const LinMap& mt = w.t.mul;
  const LinMap& ms = w.s.mul;
  const LinMap& et = w.t.unit;
  const LinMap& es = w.s.unit;

  r.add_equal("mul_t compatibility", compose(l, whisker(kF, mt, S)),
              chain({whisker(S, mt, kF), whisker(kF, l, T), whisker(T, l, kF)}));
  r.add_equal("unit_t compatibility", compose(l, whisker(kF, et, S)),
              chain({whisker(kF, ms, T), whisker(S, l, kF), whisker(S * T, es, kF),
                     whisker(S, et, kF)}));
  r.add_equal("mul_s compatibility", compose(l, whisker(T, ms, kF)),
              chain({whisker(kF, ms, T), whisker(S, l, kF), whisker(kF, l, S)}));
  r.add_equal("unit_s compatibility", compose(l, whisker(T, es, kF)),
              chain({whisker(S, mt, kF), whisker(kF, l, T), whisker(kF, et, S * T),
                     whisker(kF, es, T)}));
  const LinMap left = lambda_bar_left(w);
  r.add_equal("lambda_bar paths agree", left, lambda_bar_right(w));
  r.add_equal("normalized by t idem (domain)", compose(l, whisker(kF, w.t.idem, S)), l);
  r.add_equal("normalized by s idem (domain)", compose(l, whisker(T, w.s.idem, kF)), l);
  r.add_equal("normalized by s idem (codomain)", compose(whisker(kF, w.s.idem, T), l), l);
  r.add_equal("normalized by t idem (codomain)", compose(whisker(S, w.t.idem, kF), l), l);
  r.set("rank lambda_bar", rank(left));
  r.set("strict", left.is_identity());
  return r;
}

Report check_wdl_identities(const WeakDistributiveLaw& w) {
  Report r("weak distributive law identities");
  const LinMap l = lam(w);
  const LinMap lb = lambda_bar(w);
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  const LinMap& mt = w.t.mul;
  const LinMap& ms = w.s.mul;
  const LinMap mumu = tensor(ms, mt);
  const LinMap s_mt = whisker(S, mt, kF);
  const LinMap ms_t = whisker(kF, ms, T);
  const LinMap l_t = whisker(kF, l, T);
  const LinMap s_l = whisker(S, l, kF);

  r.add_equal("lambda_bar absorbs lambda", compose(lb, l), l);
  r.add_equal("lambda_bar commutes with mul (x) mul", compose(mumu, whisker(S, lb, T)),
              compose(lb, mumu));
  r.add_equal("lambda_bar absorbed on the s side", chain({ms_t, s_l, whisker(kF, lb, S)}),
              compose(ms_t, s_l));
  r.add_equal("lambda_bar absorbed on the t side", chain({s_mt, l_t, whisker(T, lb, kF)}),
              compose(s_mt, l_t));
  r.add_equal("t unit square", chain({s_mt, l_t, whisker(T, w.s.unit, T)}),
              chain({l, whisker(T, w.s.unit, kF), mt}));
  r.add_equal("s unit square", chain({ms_t, s_l, whisker(S, w.t.unit, S)}),
              chain({l, whisker(kF, w.t.unit, S), ms}));
  return r;
}

Report check_monad_morphism(const MonadMorphism& m) {
  Report r("monad morphism");
  const Space& T = m.source.space;
  const Space& T2 = m.target.space;
  const Space& V = m.carrier;
  const bool shapes = m.xi.cols() == T2.dim() * V.dim() && m.xi.rows() == V.dim() * T.dim() &&
                      m.carrier_idem.rows() == V.dim() && m.carrier_idem.cols() == V.dim();
  r.add("shape", shapes, "structure map has size " + std::to_string(m.xi.rows()) + "x" +
                             std::to_string(m.xi.cols()));
  if (!shapes) return r;
  const LinMap xi = m.xi.reshape(T2 * V, V * T);
  const LinMap& vb = m.carrier_idem;
  r.add_equal("carrier idempotent", compose(vb, vb), vb);
  r.add_equal("mul", compose(xi, whisker(kF, m.target.mul, V)),
              chain({whisker(V, m.source.mul, kF), whisker(kF, xi, T), whisker(T2, xi, kF)}));
  r.add_equal("unit", compose(xi, whisker(kF, m.target.unit, V)), tensor(vb, m.source.unit));
  r.add_equal("normalized (codomain)", compose(tensor(vb, m.source.idem), xi), xi);
  r.add_equal("normalized (domain)", compose(xi, tensor(m.target.idem, vb)), xi);
  return r;
}

MonadMorphism identity_morphism(const Demimonad& t) {
  return {t, t, kF, LinMap::identity(kF, t.field()), t.idem};
}

MonadMorphism compose_morphisms(const MonadMorphism& g, const MonadMorphism& f) {
  const Space& T = f.source.space;
  const Space& T1 = f.target.space;
  const Space& T2 = g.target.space;
  const Space& Vg = g.carrier;
  const Space& Vf = f.carrier;
  const LinMap xf = f.xi.reshape(T1 * Vf, Vf * T);
  const LinMap xg = g.xi.reshape(T2 * Vg, Vg * T1);
  return {f.source, g.target, Vg * Vf, tensor(g.carrier_idem, f.carrier_idem),
          compose(whisker(Vg, xf, kF), whisker(kF, xg, Vf))};
}

bool same_morphism(const MonadMorphism& a, const MonadMorphism& b) {
  return a.carrier.dim() == b.carrier.dim() && a.carrier_idem == b.carrier_idem && a.xi == b.xi;
}

Report check_wdl_one_cell(const WdlOneCell& c, const WeakDistributiveLaw& w,
                          const WeakDistributiveLaw& w2) {
  Report r("weak distributive law 1-cell");
  const Report mt = check_monad_morphism({w.t, w2.t, c.carrier, c.carrier_idem, c.xi_t});
  const Report ms = check_monad_morphism({w.s, w2.s, c.carrier, c.carrier_idem, c.xi_s});
  r.merge("xi_t", mt);
  r.merge("xi_s", ms);
  if (!mt.find("shape")->pass || !ms.find("shape")->pass) return r;
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  const Space& T2 = w2.t.space;
  const Space& S2 = w2.s.space;
  const Space& V = c.carrier;
  const LinMap xi = c.xi_t.reshape(T2 * V, V * T);
  const LinMap zeta = c.xi_s.reshape(S2 * V, V * S);
  r.add_equal("compatible with the laws",
              chain({whisker(V, lam(w), kF), whisker(kF, xi, S), whisker(T2, zeta, kF)}),
              chain({whisker(V, lambda_bar(w), kF), whisker(kF, zeta, T), whisker(S2, xi, kF),
                     whisker(kF, lam(w2), V)}));
  return r;
}

WdlOneCell identity_one_cell(const WeakDistributiveLaw& w) {
  return {kF, LinMap::identity(kF, w.field()), w.t.idem, w.s.idem};
}

WdlOneCell compose_one_cells(const WdlOneCell& g, const WdlOneCell& f) {
  auto part = [&](const LinMap& xg, const LinMap& xf) {
    const std::size_t t1 = xf.cols() / f.carrier.dim();
    const std::size_t t = xf.rows() / f.carrier.dim();
    const std::size_t t2 = xg.cols() / g.carrier.dim();
    const Space T{t}, T1{t1}, T2{t2};
    const LinMap a = xf.reshape(T1 * f.carrier, f.carrier * T);
    const LinMap b = xg.reshape(T2 * g.carrier, g.carrier * T1);
    return compose(whisker(g.carrier, a, kF), whisker(kF, b, f.carrier));
  };
  return {g.carrier * f.carrier, tensor(g.carrier_idem, f.carrier_idem), part(g.xi_t, f.xi_t),
          part(g.xi_s, f.xi_s)};
}

WeakWreath weak_wreath(const WeakDistributiveLaw& w) {
  const Report r = check_wdl(w);
  if (!r.ok()) throw InvalidLaw("law fails '" + r.failures().front().name + "'");
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  const LinMap l = lam(w);
  Demimonad d = Demimonad::make(
      S * T, compose(tensor(w.s.mul, w.t.mul), whisker(S, l, T)).reshape(S * T * S * T, S * T),
      compose(l, tensor(w.t.unit, w.s.unit)).reshape(kF, S * T));
  const LinMap one = LinMap::identity(kF, w.field());
  MonadMorphism pt{d, w.t, kF, one, compose(l, whisker(T, w.s.unit, kF)).reshape(T, S * T)};
  MonadMorphism ps{d, w.s, kF, one, compose(l, whisker(kF, w.t.unit, S)).reshape(S, S * T)};
  return {std::move(d), std::move(pt), std::move(ps)};
}

MonadMorphism wreath_one_cell(const WdlOneCell& c, const WeakDistributiveLaw& w,
                              const WeakDistributiveLaw& w2) {
  const Report r = check_wdl_one_cell(c, w, w2);
  if (!r.ok()) throw InvalidOneCell("1-cell fails '" + r.failures().front().name + "'");
  const Space& T = w.t.space;
  const Space& S = w.s.space;
  const Space& T2 = w2.t.space;
  const Space& S2 = w2.s.space;
  const Space& V = c.carrier;
  const LinMap xi = c.xi_t.reshape(T2 * V, V * T);
  const LinMap zeta = c.xi_s.reshape(S2 * V, V * S);
  LinMap structure =
      chain({whisker(V, lambda_bar(w), kF), whisker(kF, zeta, T), whisker(S2, xi, kF)});
  return {weak_wreath(w).d, weak_wreath(w2).d, V, c.carrier_idem, std::move(structure)};
}

BinaryFactorization binary_factorize(const Demimonad& r, const Demimonad& t, const Demimonad& s,
                                     const LinMap& alpha, const LinMap& beta,
                                     const LinMap& iota) {
  const Space& R = r.space;
  const Space& T = t.space;
  const Space& S = s.space;
  if (alpha.cols() != T.dim() || alpha.rows() != R.dim() || beta.cols() != S.dim() ||
      beta.rows() != R.dim() || iota.cols() != R.dim() || iota.rows() != S.dim() * T.dim()) {
    throw ShapeMismatch("factorization data has incompatible sizes");
  }
  const LinMap a = alpha.reshape(T, R);
  const LinMap b = beta.reshape(S, R);
  const LinMap io = iota.reshape(R, S * T);
  const LinMap one = LinMap::identity(kF, r.field());

  Report rep("binary factorization");
  rep.merge("(a) alpha", check_monad_morphism({r, t, kF, one, a}));
  rep.merge("(a) beta", check_monad_morphism({r, s, kF, one, b}));
  if (!rep.ok()) {
    const auto f = rep.failures().front();
    throw PreconditionFailure("condition (a) violated: " + f.name + " " + f.witness);
  }
  const LinMap pi = compose(r.mul, tensor(b, a)).reshape(S * T, R);
  rep.add_equal("(b) pi.iota = idem", compose(pi, io), r.idem);
  rep.add_equal("(b) left s-module map",
                chain({io, r.mul, whisker(kF, b, R), tensor(s.idem, r.idem)}),
                chain({whisker(kF, s.mul, T), whisker(S, io, kF), tensor(s.idem, r.idem)}));
  rep.add_equal("(b) right t-module map",
                chain({io, r.mul, whisker(R, a, kF), tensor(r.idem, t.idem)}),
                chain({whisker(S, t.mul, kF), whisker(kF, io, T), tensor(r.idem, t.idem)}));
  if (!rep.ok()) {
    const auto f = rep.failures().front();
    throw PreconditionFailure("condition (b) violated: " + f.name + " " + f.witness);
  }

  WeakDistributiveLaw law{t, s, chain({io, r.mul, tensor(a, b)}).reshape(T * S, S * T)};
  const Report lr = check_wdl(law);
  rep.merge("law", lr);
  if (lr.ok()) {
    const LinMap lb = lambda_bar(law);
    rep.add_equal("lambda_bar = iota.pi", lb, compose(io, pi));
    const Demimonad wr = weak_wreath(law).d;
    rep.add_equal("iso: pi preserves mul", compose(pi, wr.mul), compose(r.mul, tensor(pi, pi)));
    rep.add_equal("iso: pi preserves unit", compose(pi, wr.unit), r.unit);
    rep.add_equal("iso: iota preserves mul", compose(io, r.mul), compose(wr.mul, tensor(io, io)));
    rep.add_equal("iso: iota preserves unit", compose(io, r.unit), wr.unit);
  }
  const bool mismatch = r.idem.is_identity() && !compose(io, pi).is_identity();
  rep.set("strict mismatch", mismatch);
  return {std::move(law), pi, std::move(rep), mismatch};
}

Report wreath_round_trip(const WeakDistributiveLaw& w) {
  Report r("round trip");
  const WeakWreath ww = weak_wreath(w);
  const BinaryFactorization f =
      binary_factorize(ww.d, w.t, w.s, ww.proj_t.xi, ww.proj_s.xi, lambda_bar(w));
  r.merge("factorization", f.report);
  r.add_equal("lambda recovered", f.law.lambda, w.lambda);
  r.set("strict mismatch", f.strict_mismatch);
  return r;
}

}  // namespace wreath
