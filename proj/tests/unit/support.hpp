#pragma once

#include <random>

#include "wreath/cube.hpp"
#include "wreath/spinchain.hpp"

namespace wreath::test {

inline LinMap random_map(std::mt19937_64& rng, const Space& dom, const Space& cod,
                         double density = 0.5, int range = 3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-range, range);
  std::vector<LinMap::Entry> e;
  for (std::size_t c = 0; c < dom.dim(); ++c) {
    for (std::size_t r = 0; r < cod.dim(); ++r) {
      if (coin(rng) < density) e.push_back({r, c, Scalar(val(rng))});
    }
  }
  return LinMap::from_entries(dom, cod, Field::rational(), e);
}

inline Space random_space(std::mt19937_64& rng, std::size_t max_factors = 2,
                          std::size_t max_dim = 3) {
  std::uniform_int_distribution<std::size_t> nf(1, max_factors);
  std::uniform_int_distribution<std::size_t> d(1, max_dim);
  std::vector<std::size_t> shape(nf(rng));
  for (auto& x : shape) x = d(rng);
  return Space(shape);
}

/// Canonical law of h on H (x) Hhat, as a law with t = H and s = Hhat.
inline WeakDistributiveLaw law_of(const WeakBialgebra& h) {
  const DualPair p = dual(h);
  return {Demimonad::from_algebra(p.h.algebra), Demimonad::from_algebra(p.hhat.algebra),
          canonical_lambda(p)};
}

inline WeakDistributiveLaw law_hat_of(const WeakBialgebra& h) {
  const DualPair p = dual(h);
  return {Demimonad::from_algebra(p.hhat.algebra), Demimonad::from_algebra(p.h.algebra),
          canonical_lambda_hat(p)};
}

inline WdlNObject chain(const std::string& name, std::size_t n, bool parity = false) {
  return build_spin_chain({builtin_bialgebra(name), n, parity});
}

inline std::string first_failure(const Report& r) {
  const auto f = r.failures();
  return f.empty() ? std::string() : f.front().name + ": " + f.front().witness;
}

/// Permutation matrix e_i -> e_{perm[i]}.
inline LinMap permutation_map(const std::vector<std::size_t>& perm, const Space& s) {
  std::vector<LinMap::Entry> e;
  for (std::size_t i = 0; i < perm.size(); ++i) e.push_back({perm[i], i, Scalar(1)});
  return LinMap::from_entries(s, s, Field::rational(), e);
}

}  // namespace wreath::test
