#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wreath/wdln.hpp"

namespace wreath {

/// Subsets of {0..n} are bitmasks.
using Subset = std::uint32_t;

/// Vertex s_p is the iterated wreath on the sub-object p (the base field for
/// the empty set). Edge phi_p^i: s_p -> s_{p+i} inserts the unit of s_i and
/// applies lambda_bar_{p+i}.
struct MonadCube {
  std::size_t size = 0;  // number of monads n + 1
  std::vector<Demimonad> vertex;
  std::vector<LinMap> edges;  // edges[p * size + i], empty when i is in p

  const Demimonad& at(Subset p) const { return vertex.at(p); }
  const LinMap& edge(Subset p, std::size_t i) const;
  Subset full() const { return (Subset{1} << size) - 1; }
};

std::vector<std::size_t> members(Subset p);
std::string subset_string(Subset p);

/// Throws PreconditionFailure for more than 16 monads.
MonadCube build_cube(const WdlNObject& o);
/// The edge as a monad morphism with trivial carrier, source s_{p+i} and
/// target s_p.
MonadMorphism edge_morphism(const MonadCube& c, Subset p, std::size_t i);
/// Vertex axioms, every edge a monad morphism, every square face commutes.
Report verify_cube(const MonadCube& c);

/// s_p -> s_{p+q}: composite of edges adding the elements of q in increasing
/// order.
LinMap cube_path(const MonadCube& c, Subset p, Subset q);

/// Data for the n-ary factorization: a cube, sections iota_{p,q}: s_{p+q} ->
/// s_p (x) s_q for p < q, and an optional algebra with an isomorphism to the
/// top vertex.
struct FactorizationData {
  MonadCube cube;
  std::map<std::pair<Subset, Subset>, LinMap> iota;
  std::optional<Demimonad> target;
  LinMap to_top;    // target -> s_full
  LinMap from_top;  // s_full -> target
};

/// p < q: both nonempty, disjoint, every element of p below every element of q.
std::vector<std::pair<Subset, Subset>> ordered_pairs(std::size_t size);
/// pi_{p,q} = mu_{p+q}.(phi_p^q (x) phi^p_q).
LinMap factorization_pi(const MonadCube& c, Subset p, Subset q);
/// iota_{p,q} = lambda_bar_{p+q}, with the split top vertex as target.
FactorizationData canonical_factorization(const WdlNObject& o, bool with_target = true);
/// Conditions (a) the bottom vertex is trivial and the target matches the top
/// vertex, (b) each iota is a bimodule section of pi, (c) coassociativity of
/// the sections and the two compatibility hexagons for every p < q < r.
Report nary_factorization_check(const FactorizationData& f);

/// The monad morphism between vertices p induced by a 1-cell.
std::vector<MonadMorphism> cube_one_cell(const WdlNOneCell& c, const WdlNObject& o,
                                         const WdlNObject& o2);
/// Each vertex morphism is valid, commutes with the edges, and singleton
/// vertices give back the original components.
Report check_cube_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2);

}  // namespace wreath
