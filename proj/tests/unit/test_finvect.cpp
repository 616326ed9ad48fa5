#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreath/errors.hpp"
#include "wreath/parallel.hpp"

using namespace wreath;
using test::random_map;
using test::random_space;

TEST_CASE("spaces") {
  const Space s{2, 3};
  CHECK(s.dim() == 6);
  CHECK(s.factors() == 2);
  CHECK(s.unravel(5) == std::vector<std::size_t>{1, 2});
  CHECK(s.index_string(4) == "(1,1)");
  CHECK(s.to_string() == "[2,3]");
  CHECK((s * Space{4}).shape() == std::vector<std::size_t>{2, 3, 4});
  CHECK(Space{2}.pow(3).dim() == 8);
  CHECK(Space().is_field());
  CHECK(Space().dim() == 1);
  CHECK(tensor({Space{2}, Space(), Space{5}}) == Space{2, 5});
}

TEST_CASE("construction and canonical form") {
  const Space a{2};
  LinMap f = LinMap::from_entries(a, a, Field::rational(),
                                  {{0, 0, Scalar(1)}, {0, 0, Scalar(-1)}, {1, 0, Scalar(2)}});
  CHECK(f.nnz() == 1);
  CHECK(f.at(1, 0) == Scalar(2));
  CHECK(f.at(0, 0).is_zero());
  CHECK(LinMap::from_dense(f.to_dense(), a, a) == f);
  CHECK(LinMap::identity(Space{3}).is_identity());
  CHECK_FALSE(f.is_identity());
  CHECK(LinMap(a, a).nnz() == 0);
}

TEST_CASE("composition checks dimensions") {
  const LinMap f(Space{2}, Space{3});
  const LinMap g(Space{4}, Space{5});
  CHECK_THROWS_AS(compose(f, g), ShapeMismatch);
}

TEST_CASE("composition is associative and unital on random maps") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const Space a = random_space(rng), b = random_space(rng), c = random_space(rng),
                d = random_space(rng);
    const LinMap f = random_map(rng, c, d), g = random_map(rng, b, c), h = random_map(rng, a, b);
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
    CHECK(chain({f, g, h}) == compose(f, compose(g, h)));
    CHECK(compose(f, LinMap::identity(c)) == f);
    CHECK(compose(LinMap::identity(d), f) == f);
    CHECK(compose(f, g).transpose() == compose(g.transpose(), f.transpose()));
    CHECK(LinMap::from_dense(f.to_dense() * g.to_dense(), b, d) == compose(f, g));
  }
}

TEST_CASE("interchange law for the tensor product") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const Space a = random_space(rng), b = random_space(rng), c = random_space(rng),
                x = random_space(rng), y = random_space(rng), z = random_space(rng);
    const LinMap f = random_map(rng, b, c), g = random_map(rng, a, b);
    const LinMap h = random_map(rng, y, z), k = random_map(rng, x, y);
    CHECK(compose(tensor(f, h), tensor(g, k)) == tensor(compose(f, g), compose(h, k)));
    CHECK(tensor(tensor(f, h), g) == tensor(f, tensor(h, g)));
    CHECK(tensor({f, h, g}) == tensor(f, tensor(h, g)));
    CHECK(tensor(f, h).domain() == b * y);
  }
}

TEST_CASE("naturality of the flip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Space a = random_space(rng), b = random_space(rng), c = random_space(rng),
                d = random_space(rng);
    const LinMap f = random_map(rng, a, b), g = random_map(rng, c, d);
    CHECK(compose(flip(b, d), tensor(f, g)) == compose(tensor(g, f), flip(a, c)));
    CHECK(compose(flip(b, a), flip(a, b)).is_identity());
  }
}

TEST_CASE("whiskering and permutations") {
  std::mt19937_64 rng(4);
  const Space a{2}, b{3}, c{2};
  const LinMap f = random_map(rng, b, b);
  CHECK(whisker(a, f, c) == tensor({LinMap::identity(a), f, LinMap::identity(c)}));
  CHECK(permutation({a, b}, {1, 0}) == flip(a, b));
  CHECK(permutation({a, b, c}, {0, 1, 2}).is_identity());
  // cyclic shift a b c -> c a b as two flips
  CHECK(permutation({a, b, c}, {2, 0, 1}) ==
        compose(whisker(Space(), flip(a, c), b), whisker(a, flip(b, c), Space())));
  const LinMap p = permutation({a, b, c}, {2, 0, 1});
  CHECK(p.codomain() == c * a * b);
  CHECK(compose(p.transpose(), p).is_identity());
}

TEST_CASE("reshape, scaling and arithmetic") {
  std::mt19937_64 rng(5);
  const LinMap f = random_map(rng, Space{2, 3}, Space{6});
  const LinMap g = f.reshape(Space{6}, Space{3, 2});
  CHECK(g == f);
  CHECK(g.domain() == Space{6});
  CHECK_THROWS_AS(f.reshape(Space{5}, Space{6}), ShapeMismatch);
  CHECK((f + f) == f.scaled(Scalar(2)));
  CHECK((f - f).nnz() == 0);
}

TEST_CASE("witnesses name the first differing entry") {
  const Space s{2, 2};
  const LinMap id = LinMap::identity(s);
  const LinMap other = id.scaled(Scalar(3));
  const auto d = first_difference(id, other);
  REQUIRE(d.has_value());
  CHECK(d->row == 0);
  CHECK(d->col == 0);
  CHECK(describe(*d, id) == "in=(0,0) out=(0,0) lhs=1 rhs=3");
  CHECK_FALSE(first_difference(id, id).has_value());
}

TEST_CASE("rank of sparse maps") {
  CHECK(rank(LinMap::identity(Space{4, 4})) == 16);
  CHECK(rank(LinMap(Space{3}, Space{3})) == 0);
  const Space s{2};
  CHECK(rank(flip(s, s)) == 4);
}

TEST_CASE("parallel composition matches the serial result") {
  std::mt19937_64 rng(6);
  const Space a{16, 16}, b{16, 16}, c{16, 16};
  const LinMap f = random_map(rng, b, c, 0.1), g = random_map(rng, a, b, 0.1);
  set_threads(1);
  const LinMap serial = compose(f, g);
  set_threads(4);
  const LinMap par = compose(f, g);
  set_threads(1);
  CHECK(serial == par);
  CHECK(serial.nnz() == par.nnz());
}

TEST_CASE("parallel_for rethrows the lowest failing block") {
  set_threads(4);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i == 30 || i == 90) throw Error("block " + std::to_string(i));
    });
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "block 30");
  }
  set_threads(1);
}

TEST_CASE("maps over a prime field") {
  const Field f = Field::prime(5);
  const Space s{2};
  const LinMap a = LinMap::identity(s, f).scaled(Scalar::in(f, 3));
  CHECK(compose(a, a) == LinMap::identity(s, f).scaled(Scalar::in(f, 4)));
  CHECK(compose(a, LinMap::identity(s, f).scaled(Scalar::in(f, 2))).is_identity());
}
