#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreath/errors.hpp"

using namespace wreath;
using test::chain;

TEST_CASE("site assignment alternates and parity swaps it") {
  const WeakBialgebra h = builtin_bialgebra("m2");
  const DualPair p = dual(h);
  const WdlNObject even = chain("m2", 3, false);
  const WdlNObject odd = chain("m2", 3, true);
  for (std::size_t i = 0; i <= 3; ++i) {
    CAPTURE(i);
    const Algebra& site = (i % 2 == 0) ? p.h.algebra : p.hhat.algebra;
    const Algebra& other = (i % 2 == 0) ? p.hhat.algebra : p.h.algebra;
    CHECK(even.monads[i].mul == site.mul);
    CHECK(odd.monads[i].mul == other.mul);
  }
  CHECK(even.law(0, 1) == canonical_lambda_hat(p));
  CHECK(even.law(1, 2) == canonical_lambda(p));
  CHECK(odd.law(0, 1) == canonical_lambda(p));
  const Space& s = even.monads[0].space;
  CHECK(even.law(0, 2) == flip(s, s));
  CHECK(even.law(1, 3) == flip(s, s));
}

TEST_CASE("explicit chain idempotent agrees with the iterated construction") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (bool parity : {false, true}) {
      CAPTURE(n);
      CHECK_NOTHROW(explicit_chain_idempotent({builtin_bialgebra("z2"), n, parity}));
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (bool parity : {false, true}) {
      CAPTURE(n);
      const SpinChainSpec spec{builtin_bialgebra("m2"), n, parity};
      CHECK(explicit_chain_idempotent(spec) == iterated_idempotent(build_spin_chain(spec)));
    }
  }
  for (const char* name : {"z3", "m3"}) {
    CAPTURE(name);
    CHECK_NOTHROW(explicit_chain_idempotent({builtin_bialgebra(name), 2, false}));
  }
}

TEST_CASE("strict bialgebras give tensor-power dimensions") {
  for (const char* name : {"z2", "z3", "s3"}) {
    const WeakBialgebra h = builtin_bialgebra(name);
    const std::size_t d = h.space().dim();
    std::size_t expect = d;
    for (std::size_t n = 1; n <= (d > 3 ? 1 : 3); ++n) {
      expect *= d;
      CAPTURE(name);
      CAPTURE(n);
      CHECK(observable_algebra({h, n, false}).dim == expect);
      CHECK(explicit_chain_idempotent({h, n, false}).is_identity());
    }
  }
}

TEST_CASE("the trivial bialgebra gives the trivial chain") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ObservableAlgebra a = observable_algebra({builtin_bialgebra("f"), n, false});
    CHECK(a.dim == 1);
  }
}

TEST_CASE("observable algebras of the pair groupoids") {
  const std::vector<std::pair<std::size_t, std::size_t>> m2 = {{1, 8}, {2, 16}, {3, 32}};
  for (const auto& [n, dim] : m2) {
    for (bool parity : {false, true}) {
      CAPTURE(n);
      const ObservableAlgebra a = observable_algebra({builtin_bialgebra("m2"), n, parity});
      CHECK(a.dim == dim);
      CHECK(check_algebra(a.alg).ok());
      CHECK(a.alg.space.dim() == dim);
    }
  }
  CHECK(observable_algebra({builtin_bialgebra("m3"), 1, false}).dim == 27);
}

TEST_CASE("observable dimensions are bounded by the carrier") {
  for (const char* name : {"z2", "m2", "m3", "z3"}) {
    const WeakBialgebra h = builtin_bialgebra(name);
    std::size_t carrier = h.space().dim();
    for (std::size_t n = 1; n <= 2; ++n) {
      carrier *= h.space().dim();
      const std::size_t dim = observable_algebra({h, n, false}).dim;
      CAPTURE(name);
      CHECK(dim <= carrier);
      CHECK(dim >= 1);
    }
  }
}

TEST_CASE("non-bialgebras are rejected") {
  WeakBialgebra h = builtin_bialgebra("z2");
  h.coalgebra.counit = h.coalgebra.counit.scaled(Scalar(2));
  CHECK_THROWS_AS(build_spin_chain({h, 2, false}), AxiomFailure);
}
