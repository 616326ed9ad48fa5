#include "wreath/spinchain.hpp"

#include "wreath/errors.hpp"

namespace wreath {

namespace {

const Space kF;

struct Chain {
  Demimonad even;      // algebra on even sites
  Demimonad odd;       // algebra on odd sites
  LinMap odd_even;     // lambda_{i,i+1} for even i: odd (x) even -> even (x) odd
  LinMap even_odd;     // lambda_{i,i+1} for odd i: even (x) odd -> odd (x) even
};

Chain chain_data(const SpinChainSpec& spec) {
  const DualPair p = dual(spec.h);
  Demimonad h = Demimonad::from_algebra(p.h.algebra);
  Demimonad hh = Demimonad::from_algebra(p.hhat.algebra);
  LinMap lam = canonical_lambda(p);
  LinMap lam_hat = canonical_lambda_hat(p);
  if (spec.parity) return {hh, h, lam, lam_hat};
  return {h, hh, lam_hat, lam};
}

}  // namespace

WdlNObject build_spin_chain(const SpinChainSpec& spec) {
  const Chain c = chain_data(spec);
  const std::size_t sites = spec.n + 1;
  std::vector<Demimonad> monads;
  for (std::size_t i = 0; i < sites; ++i) monads.push_back(i % 2 ? c.odd : c.even);
  WdlNObject o = flip_object(std::move(monads));
  for (std::size_t i = 0; i + 1 < sites; ++i) {
    o.laws[i][i + 1] = i % 2 ? c.even_odd : c.odd_even;
  }
  return o;
}

ObservableAlgebra observable_algebra(const SpinChainSpec& spec) {
  SplitDemimonad s = split_iterated_wreath(build_spin_chain(spec));
  const std::size_t dim = s.alg.space.dim();
  return {std::move(s.alg), dim};
}

LinMap explicit_chain_idempotent_unchecked(const SpinChainSpec& spec) {
  const Chain c = chain_data(spec);
  const Space& E = c.even.space;
  const Space& O = c.odd.space;
  const std::size_t n = spec.n;
  const Space carrier = [&] {
    Space s;
    for (std::size_t i = 0; i <= n; ++i) s = s * (i % 2 ? O : E);
    return s;
  }();
  if (n == 0) return c.even.idem;
  // bar_eo on E (x) O, bar_oe on O (x) E
  const LinMap bar_eo = lambda_bar({c.odd, c.even, c.odd_even});
  const LinMap bar_oe = lambda_bar({c.even, c.odd, c.even_odd});
  auto power = [](const LinMap& f, std::size_t k) {
    LinMap r = LinMap::identity(kF, f.field());
    for (std::size_t i = 0; i < k; ++i) r = tensor(r, f);
    return r;
  };
  LinMap e;
  if (n % 2) {
    e = compose(tensor({LinMap::identity(E, c.even.field()), power(bar_oe, (n - 1) / 2),
                        LinMap::identity(O, c.even.field())}),
                power(bar_eo, (n + 1) / 2));
  } else {
    e = compose(tensor(LinMap::identity(E, c.even.field()), power(bar_oe, n / 2)),
                tensor(power(bar_eo, n / 2), LinMap::identity(E, c.even.field())));
  }
  return e.reshape(carrier, carrier);
}

LinMap explicit_chain_idempotent(const SpinChainSpec& spec) {
  LinMap e = explicit_chain_idempotent_unchecked(spec);
  const LinMap general = iterated_idempotent(build_spin_chain(spec));
  const std::string wit = equality_witness(e, general);
  if (!wit.empty()) {
    throw MismatchWithGeneralFormula("nearest-neighbour product differs from the iterated "
                                     "idempotent: " + wit);
  }
  return e;
}

}  // namespace wreath
