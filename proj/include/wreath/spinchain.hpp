#pragma once

#include "wreath/wdln.hpp"
#include "wreath/weakbialgebra.hpp"

namespace wreath {

/// Sites 0..n alternate between H (even sites) and its dual (odd sites);
/// parity swaps the two.
struct SpinChainSpec {
  WeakBialgebra h;
  std::size_t n = 1;
  bool parity = false;
};

/// Neighbouring sites interact through the canonical laws, distant sites
/// through flips. Throws AxiomFailure if h is not a weak bialgebra.
WdlNObject build_spin_chain(const SpinChainSpec& spec);
struct ObservableAlgebra {
  Algebra alg;
  std::size_t dim = 0;
};

/// Iterated wreath of the chain, split to an honest algebra.
ObservableAlgebra observable_algebra(const SpinChainSpec& spec);
/// Product of nearest-neighbour lambda_bar layers, without comparison.
LinMap explicit_chain_idempotent_unchecked(const SpinChainSpec& spec);
/// As above; throws MismatchWithGeneralFormula unless it equals the iterated
/// idempotent of the chain.
LinMap explicit_chain_idempotent(const SpinChainSpec& spec);

}  // namespace wreath
