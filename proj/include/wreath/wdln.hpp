#pragma once

#include <cstdint>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/report.hpp"
#include "wreath/wdl.hpp"

namespace wreath {

/// Demimonads s_0..s_n with laws lambda_{i,j}: s_j (x) s_i -> s_i (x) s_j for
/// i < j.
struct WdlNObject {
  std::vector<Demimonad> monads;
  /// laws[i][j] for i < j; other slots are unused.
  std::vector<std::vector<LinMap>> laws;

  std::size_t size() const { return monads.size(); }
  const Field& field() const { return monads.front().field(); }
  const LinMap& law(std::size_t i, std::size_t j) const;
  /// lambda_{i,j} as a law with t = s_j and s = s_i.
  WeakDistributiveLaw pair(std::size_t i, std::size_t j) const;
  /// s_0 (x) ... (x) s_n.
  Space carrier() const;
  /// Tensor product of the spaces of the listed monads.
  Space carrier(const std::vector<std::size_t>& word) const;
  /// The object on the given increasing subset of indices.
  WdlNObject restrict(const std::vector<std::size_t>& indices) const;
};

/// All laws are flips.
WdlNObject flip_object(std::vector<Demimonad> monads);

/// Pairwise law checks and all Yang-Baxter triples.
Report validate_object(const WdlNObject& o);
/// Both sides of the Yang-Baxter relation on s_k (x) s_j (x) s_i.
std::pair<LinMap, LinMap> yang_baxter_sides(const WdlNObject& o, std::size_t i, std::size_t j,
                                            std::size_t k);

/// Composite of adjacent laws moving the factors of (x)_k s_{word[k]} to
/// sorted order (stable). The schedule repeatedly swaps the leftmost adjacent
/// pair that is out of order. Throws PreconditionFailure if a swap would need
/// a law in the wrong direction.
LinMap shuffle(const WdlNObject& o, const std::vector<std::size_t>& word);
/// As above, but the factor at position k moves to position ranks[k].
LinMap shuffle(const WdlNObject& o, const std::vector<std::size_t>& word,
               const std::vector<std::size_t>& ranks);
/// Sorting shuffle that swaps a randomly chosen out-of-order adjacent pair at
/// each step.
/// shuffle(o, word) after g.
LinMap shuffle_after(const WdlNObject& o, const std::vector<std::size_t>& word,
                     const LinMap& g);
LinMap shuffle_random(const WdlNObject& o, const std::vector<std::size_t>& word,
                      std::uint64_t seed);

/// Right arrow idempotent on s_0 s_p s_q for (p, q) = (1, 2) or (2, 1).
LinMap right_arrow(const WdlNObject& o, std::size_t p, std::size_t q);
/// Left arrow idempotent on s_k s_l s_2 for (k, l) = (0, 1) or (1, 0).
LinMap left_arrow(const WdlNObject& o, std::size_t k, std::size_t l);

struct ArrowIdempotents {
  LinMap right;  // ->lambda_{0,1,2}
  LinMap left;   // <-lambda_{0,1,2}
};

/// Requires exactly three monads (PreconditionFailure otherwise).
ArrowIdempotents arrow_idempotents(const WdlNObject& o);
/// Idempotency, normalization, intertwining and absorption identities of the
/// arrows, and the equality of the four expressions for lambda_bar_{012}.
Report check_arrow_identities(const WdlNObject& o);
/// For three monads: the two expressions for each of the fused laws
/// lambda_{01,2}, lambda_{0,12}, and equality of the monads they induce.
Report check_fused_laws(const WdlNObject& o);

/// Fuses s_{k-1} and s_k (1 <= k <= n) into their weak wreath demimonad.
/// Throws IndexOutOfRange.
WdlNObject functor_Ck(const WdlNObject& o, std::size_t k);

/// <-lambda_{0,...,m}: inserts eta_m on the left, moves it to the right end
/// and multiplies. Acts on s_0 ... s_m.
LinMap left_arrow_chain(const WdlNObject& o, std::size_t m);
/// The global idempotent lambda_bar_{0...n} on s_0 ... s_n.
LinMap iterated_idempotent(const WdlNObject& o);
/// Idempotency and invariance under every C_k.
Report check_iterated_idempotent(const WdlNObject& o);

/// lambda_{0...n-1,n} between the iterated wreath of s_0..s_{n-1} (as s) and
/// s_n (as t). Requires at least two monads.
WeakDistributiveLaw composite_law(const WdlNObject& o);
/// The law axioms, the alternate expression via lambda_bar_{0...n}, and
/// equality of its lambda_bar with lambda_bar_{0...n}.
Report check_composite_law(const WdlNObject& o);

/// Demimonad on s_0 ... s_n with idempotent lambda_bar_{0...n}.
Demimonad iterated_wreath(const WdlNObject& o);
/// The iterated wreath split to its image, computed on the image directly so
/// the carrier-sized multiplication is never formed. Throws
/// DemimonadAxiomFailure if the split algebra is not associative and unital.
SplitDemimonad split_iterated_wreath(const WdlNObject& o);

/// Applies C_{k_n}, then C_{k_{n-1}}, ..., then C_{k_1}; ks = {k_n, ..., k_1}.
Demimonad composite_wreath(const WdlNObject& o, const std::vector<std::size_t>& ks);
/// Every admissible sequence (k_n, ..., k_1) with 1 <= k_i <= i.
std::vector<std::vector<std::size_t>> composite_sequences(std::size_t n);

/// Compares mul and unit of every composite (all of them for n <= 4, a fixed
/// deterministic sample of 24 otherwise) with iterated_wreath.
Report check_associativity(const WdlNObject& o);

/// Carrier v with structure maps xi_i: s2_i (x) v -> v (x) s_i.
struct WdlNOneCell {
  Space carrier;
  LinMap carrier_idem;
  std::vector<LinMap> xi;
};

/// Every pair (xi_i, xi_j) is a 1-cell lambda_{i,j} -> lambda2_{i,j}.
Report check_wdln_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2);
WdlNOneCell identity_wdln_one_cell(const WdlNObject& o);
/// Fuses xi_{k-1}, xi_k into (v (x) lambda_bar).(xi_{k-1} (x) s_k).(s2_{k-1} (x) xi_k).
/// Throws InvalidOneCell or IndexOutOfRange.
WdlNOneCell functor_Ck_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2,
                                std::size_t k);
/// The induced monad morphism between the iterated wreaths.
MonadMorphism iterated_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2);
WdlNOneCell restrict_one_cell(const WdlNOneCell& c, const std::vector<std::size_t>& indices);

}  // namespace wreath
