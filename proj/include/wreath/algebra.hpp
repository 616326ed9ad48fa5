#pragma once

#include "wreath/linmap.hpp"
#include "wreath/report.hpp"

namespace wreath {

/// Unital associative algebra given by mul: A (x) A -> A and unit: F -> A.
struct Algebra {
  Space space;
  LinMap mul;
  LinMap unit;

  const Field& field() const { return mul.field(); }
};

/// Coassociative counital coalgebra.
struct Coalgebra {
  Space space;
  LinMap comul;
  LinMap counit;

  const Field& field() const { return comul.field(); }
};

/// Monad in the idempotent closure: unit laws hold only up to the idempotent
/// idem = mul.(id (x) unit).
struct Demimonad {
  Space space;
  LinMap mul;
  LinMap unit;
  LinMap idem;

  /// Fills idem from mul and unit.
  static Demimonad make(Space space, LinMap mul, LinMap unit);
  static Demimonad from_algebra(const Algebra& a);

  const Field& field() const { return mul.field(); }
  std::size_t dim() const { return space.dim(); }
};

/// The base field as a one-dimensional algebra.
Algebra trivial_algebra(Field field = Field::rational());
Demimonad trivial_demimonad(Field field = Field::rational());

Report check_algebra(const Algebra& a);
Report check_coalgebra(const Coalgebra& c);
/// Associativity, the three unit diagrams, and the cached idempotent.
Report check_demimonad(const Demimonad& d);

struct SplitDemimonad {
  Algebra alg;
  LinMap iota;  // image -> space
  LinMap pi;    // space -> image
};

/// Splits idem and transports mul and unit to its image. Throws
/// DemimonadAxiomFailure if d fails check_demimonad.
SplitDemimonad split_demimonad(const Demimonad& d);

/// Splits an idempotent LinMap; the image gets the one-factor shape [rank].
/// Throws NotIdempotent.
std::pair<LinMap, LinMap> split_idempotent(const LinMap& e);

}  // namespace wreath
