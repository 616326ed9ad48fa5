#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreath/errors.hpp"

using namespace wreath;
using test::chain;

namespace {

const Space kF;

WdlNObject z2_flips(std::size_t count) {
  const Demimonad z2 = Demimonad::from_algebra(cyclic_group_algebra(2).algebra);
  return flip_object(std::vector<Demimonad>(count, z2));
}

}  // namespace

TEST_CASE("spin chain objects validate, including every Yang-Baxter triple") {
  for (const char* name : {"z2", "m2"}) {
    for (std::size_t n : {1, 2, 3}) {
      for (bool parity : {false, true}) {
        CAPTURE(name);
        CAPTURE(n);
        const Report r = validate_object(chain(name, n, parity));
        CHECK_MESSAGE(r.ok(), test::first_failure(r));
        if (n == 3) CHECK(r.find("yang-baxter(1,2,3)") != nullptr);
      }
    }
  }
}

TEST_CASE("a broken Yang-Baxter triple is detected") {
  WdlNObject o = chain("m2", 2);
  // replacing the distant flip by the flip composed with a swap of the objects of M2
  // keeps each pair a law but breaks the hexagon
  const Space s = o.monads[0].space;
  const LinMap swap = test::permutation_map({3, 2, 1, 0}, s);
  o.laws[0][2] = compose(tensor(swap, swap), o.laws[0][2]);
  const Report r = validate_object(o);
  CHECK_FALSE(r.ok());
}

TEST_CASE("restriction and access") {
  const WdlNObject o = chain("m2", 3);
  CHECK(o.size() == 4);
  CHECK(o.carrier().dim() == 256);
  const WdlNObject r = o.restrict({1, 3});
  CHECK(r.size() == 2);
  CHECK(r.law(0, 1) == o.law(1, 3));
  CHECK_THROWS_AS(o.law(2, 1), IndexOutOfRange);
  CHECK_THROWS_AS(o.restrict({2, 1}), IndexOutOfRange);
}

TEST_CASE("shuffles") {
  const WdlNObject o = chain("m2", 2);
  const Space& s0 = o.monads[0].space;
  const Space& s1 = o.monads[1].space;
  CHECK(shuffle(o, {0, 1, 2}).is_identity());
  CHECK(shuffle(o, {1, 0}) == o.law(0, 1));
  CHECK(shuffle(o, {2, 1, 0}) == chain({whisker(s0, o.law(1, 2), kF), whisker(kF, o.law(0, 2), s1),
                                        whisker(o.monads[2].space, o.law(0, 1), kF)}));
  CHECK_THROWS_AS(shuffle(o, {0, 1}, {1, 0}), PreconditionFailure);
  CHECK_THROWS_AS(shuffle(o, {0, 3}), IndexOutOfRange);
  CHECK_THROWS_AS(shuffle(o, {0, 1}, {0, 0}), PreconditionFailure);
}

TEST_CASE("shuffles do not depend on the schedule") {
  for (const char* name : {"m2", "z3"}) {
    const WdlNObject o = chain(name, 2);
    for (const std::vector<std::size_t>& word :
         std::vector<std::vector<std::size_t>>{{2, 1, 0}, {2, 1, 0, 2, 1}, {1, 2, 0, 1, 0}}) {
      const LinMap ref = shuffle(o, word);
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CHECK(shuffle_random(o, word, seed) == ref);
      }
    }
  }
  const WdlNObject o = chain("m2", 3);
  const LinMap ref = shuffle(o, {3, 2, 1, 0});
  for (std::uint64_t seed = 0; seed < 4; ++seed) CHECK(shuffle_random(o, {3, 2, 1, 0}, seed) == ref);
}

TEST_CASE("arrow idempotents match their defining composites") {
  const WdlNObject o = chain("m2", 2);
  const Space& s0 = o.monads[0].space;
  const Space& s1 = o.monads[1].space;
  const Space& s2 = o.monads[2].space;
  const LinMap right = chain({whisker(kF, o.monads[0].mul, s1 * s2),
                              whisker(s0, o.law(0, 1), s2), whisker(s0 * s1, o.law(0, 2), kF),
                              whisker(s0 * s1 * s2, o.monads[0].unit, kF)});
  CHECK(right_arrow(o, 1, 2) == right);
  const LinMap left = chain({whisker(s0 * s1, o.monads[2].mul, kF),
                             whisker(s0, o.law(1, 2), s2), whisker(kF, o.law(0, 2), s1 * s2),
                             whisker(kF, o.monads[2].unit, s0 * s1 * s2)});
  CHECK(left_arrow(o, 0, 1) == left);
  CHECK(left_arrow_chain(o, 2) == left);
  CHECK(left_arrow_chain(o, 1) == lambda_bar(o.pair(0, 1)));
  CHECK_THROWS_AS(right_arrow(o, 1, 1), IndexOutOfRange);
  CHECK_THROWS_AS(right_arrow(chain("m2", 1), 1, 2), PreconditionFailure);
}

TEST_CASE("arrow identities and the four expressions for lambda_bar_012") {
  for (const char* name : {"z2", "m2", "m3"}) {
    for (bool parity : {false, true}) {
      CAPTURE(name);
      const Report r = check_arrow_identities(chain(name, 2, parity));
      CHECK_MESSAGE(r.ok(), test::first_failure(r));
      CHECK(r.checks().size() == 22);
    }
  }
  const Report r = check_arrow_identities(chain("m2", 2));
  CHECK(*r.value("rank lambda_bar_012") == "16");
}

TEST_CASE("fused laws") {
  for (const char* name : {"z2", "m2"}) {
    CAPTURE(name);
    const Report r = check_fused_laws(chain(name, 2));
    CHECK_MESSAGE(r.ok(), test::first_failure(r));
  }
}

TEST_CASE("the functor C_k") {
  const WdlNObject o = chain("m2", 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const WdlNObject c = functor_Ck(o, k);
    CHECK(c.size() == 3);
    CHECK(c.carrier().dim() == 256);
    const Report r = validate_object(c);
    CHECK_MESSAGE(r.ok(), test::first_failure(r));
  }
  CHECK_THROWS_AS(functor_Ck(o, 0), IndexOutOfRange);
  CHECK_THROWS_AS(functor_Ck(o, 4), IndexOutOfRange);
  // untouched laws are kept
  CHECK(functor_Ck(o, 1).law(1, 2) == o.law(2, 3));
}

TEST_CASE("the iterated idempotent") {
  for (std::size_t n : {1, 2, 3}) {
    CAPTURE(n);
    const Report r = check_iterated_idempotent(chain("m2", n));
    CHECK_MESSAGE(r.ok(), test::first_failure(r));
  }
  CHECK(iterated_idempotent(chain("m2", 1)) == lambda_bar(chain("m2", 1).pair(0, 1)));
  const auto [ra, la] = arrow_idempotents(chain("m2", 2));
  CHECK(iterated_idempotent(chain("m2", 2)) == compose(la, ra));
  CHECK(iterated_idempotent(z2_flips(3)).is_identity());
}

TEST_CASE("composite laws") {
  for (std::size_t n : {1, 2, 3}) {
    CAPTURE(n);
    const Report r = check_composite_law(chain("m2", n));
    CHECK_MESSAGE(r.ok(), test::first_failure(r));
  }
  CHECK(composite_law(chain("m2", 1)).lambda == chain("m2", 1).law(0, 1));
  CHECK_THROWS_AS(composite_law(chain("m2", 0)), PreconditionFailure);
}

TEST_CASE("iterated wreath products") {
  const WdlNObject o = chain("m2", 2);
  const Demimonad d = iterated_wreath(o);
  CHECK(check_demimonad(d).ok());
  CHECK(d.idem == iterated_idempotent(o));
  CHECK(iterated_wreath(chain("m2", 1)).mul == weak_wreath(chain("m2", 1).pair(0, 1)).d.mul);
  // for flips this is the tensor product algebra
  const WdlNObject f = z2_flips(2);
  const Demimonad t = iterated_wreath(f);
  const Demimonad& z = f.monads[0];
  CHECK(t.mul == compose(tensor(z.mul, z.mul), whisker(z.space, flip(z.space, z.space), z.space)));
  CHECK(t.unit == tensor(z.unit, z.unit));
}

TEST_CASE("composite sequences") {
  CHECK(composite_sequences(1).size() == 1);
  CHECK(composite_sequences(2).size() == 2);
  CHECK(composite_sequences(3).size() == 6);
  CHECK(composite_sequences(4).size() == 24);
  CHECK(composite_sequences(3).front() == std::vector<std::size_t>{1, 1, 1});
  CHECK(composite_sequences(3).back() == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("associativity for small chains") {
  for (const char* name : {"z2", "m2"}) {
    for (std::size_t n : {1, 2}) {
      CAPTURE(name);
      CAPTURE(n);
      const Report r = check_associativity(chain(name, n));
      CHECK_MESSAGE(r.ok(), test::first_failure(r));
    }
  }
  const Report r = check_associativity(z2_flips(5));
  CHECK(r.ok());
  CHECK(*r.value("composites") == "24");
  CHECK(*r.value("exhaustive") == "true");
  const Report big = check_associativity(z2_flips(6));
  CHECK(big.ok());
  CHECK(*big.value("composites") == "24");
  CHECK(*big.value("exhaustive") == "false");
}

TEST_CASE("1-cells between objects") {
  const WdlNObject o = chain("m2", 2);
  const WdlNOneCell id = identity_wdln_one_cell(o);
  CHECK(check_wdln_one_cell(id, o, o).ok());
  const LinMap phi = test::permutation_map({3, 2, 1, 0}, o.monads[0].space);
  const WdlNOneCell swap{kF, LinMap::identity(kF), {phi, phi, phi}};
  const Report r = check_wdln_one_cell(swap, o, o);
  CHECK_MESSAGE(r.ok(), test::first_failure(r));
  for (std::size_t k : {1, 2}) {
    const WdlNObject c = functor_Ck(o, k);
    const WdlNOneCell f = functor_Ck_one_cell(swap, o, o, k);
    CHECK(check_wdln_one_cell(f, c, c).ok());
  }
  const MonadMorphism m = iterated_one_cell(swap, o, o);
  CHECK(check_monad_morphism(m).ok());
  CHECK(iterated_one_cell(id, o, o).xi == iterated_idempotent(o));
  WdlNOneCell bad = swap;
  bad.xi[1] = LinMap::identity(o.monads[1].space).scaled(Scalar(2));
  CHECK_FALSE(check_wdln_one_cell(bad, o, o).ok());
  CHECK_THROWS_AS(functor_Ck_one_cell(bad, o, o, 1), InvalidOneCell);
  WdlNOneCell short_cell = swap;
  short_cell.xi.pop_back();
  CHECK_FALSE(check_wdln_one_cell(short_cell, o, o).ok());
}

TEST_CASE("splitting the iterated wreath directly matches splitting the demimonad") {
  for (const char* name : {"z2", "m2", "z3"}) {
    for (std::size_t n : {0, 1, 2}) {
      CAPTURE(name);
      CAPTURE(n);
      const WdlNObject o = chain(name, n);
      const SplitDemimonad a = split_iterated_wreath(o);
      const SplitDemimonad b = split_demimonad(iterated_wreath(o));
      CHECK(a.alg.mul == b.alg.mul);
      CHECK(a.alg.unit == b.alg.unit);
      CHECK(a.iota == b.iota);
    }
  }
}

TEST_CASE("shuffle_after agrees with composing the shuffle") {
  std::mt19937_64 rng(11);
  const WdlNObject o = chain("m2", 2);
  const std::vector<std::size_t> word = {2, 0, 1, 0};
  const Space dom = o.carrier(word);
  const LinMap g = test::random_map(rng, Space{3}, dom, 0.1);
  CHECK(shuffle_after(o, word, g) == compose(shuffle(o, word), g));
  CHECK_THROWS_AS(shuffle_after(o, word, test::random_map(rng, Space{3}, Space{5})), ShapeMismatch);
}
