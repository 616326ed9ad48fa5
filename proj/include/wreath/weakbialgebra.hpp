#pragma once

#include <string>
#include <vector>

#include "wreath/algebra.hpp"

namespace wreath {

/// Algebra and coalgebra structure on one space H.
struct WeakBialgebra {
  std::string name;
  Algebra algebra;
  Coalgebra coalgebra;

  const Space& space() const { return algebra.space; }
  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.space.dim(); }
};

/// Checks the algebra and coalgebra laws, multiplicativity of the
/// comultiplication, and the weak unit and weak counit axioms. The values
/// "strict unit" and "strict counit" record whether comul.unit = unit (x) unit
/// and counit.mul = counit (x) counit.
Report check_weak_bialgebra(const WeakBialgebra& h);
bool strict_unit(const WeakBialgebra& h);
bool strict_counit(const WeakBialgebra& h);

/// Evaluation map Hhat (x) H -> F.
struct Pairing {
  LinMap ev;
};

/// H, its linear dual in the dual basis, and the evaluation between them.
struct DualPair {
  WeakBialgebra h;
  WeakBialgebra hhat;
  Pairing ev;
};

/// Transposes the four structure maps. Throws AxiomFailure unless h and the
/// result pass check_weak_bialgebra.
DualPair dual(const WeakBialgebra& h);
/// Nondegeneracy of ev and the four duality diagrams relating the structure
/// maps of hhat to those of h.
Report check_pairing(const DualPair& p);

/// (H (x) counit).(H (x) mul).(comul (x) H).(unit (x) H): H -> H.
LinMap eps_bar_s(const WeakBialgebra& h);
/// Idempotency and the two identities relating eps_bar_s to mul and comul.
Report check_eps_bar_s(const WeakBialgebra& h);

/// (Hhat (x) ev).(comul_hat (x) H): Hhat (x) H -> Hhat, f (x) h -> f(- h).
LinMap left_action_xi(const DualPair& p);
/// (ev (x) H).(Hhat (x) comul): Hhat (x) H -> H, f (x) h -> f(h1) h2.
LinMap right_action_zeta(const DualPair& p);
/// Associativity and unit laws of both actions.
Report check_actions(const DualPair& p);

/// (Hhat (x) ev (x) H).(comul_hat (x) comul).flip: H (x) Hhat -> Hhat (x) H.
LinMap canonical_lambda(const DualPair& p);
/// (H (x) ev (x) Hhat).(H (x) flip (x) Hhat).(comul (x) comul_hat).flip:
/// Hhat (x) H -> H (x) Hhat.
LinMap canonical_lambda_hat(const DualPair& p);

/// Group algebra with grouplike basis. table[a][b] is the index of a*b.
/// Throws NotAGroup.
WeakBialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                            Field field = Field::rational(), std::string name = "group");
WeakBialgebra cyclic_group_algebra(std::size_t n, Field field = Field::rational());
WeakBialgebra symmetric_group_s3_algebra(Field field = Field::rational());
/// k x k matrix algebra with comul(e_ij) = e_ij (x) e_ij and counit 1 on every
/// e_ij; basis index of e_ij is i*k + j.
WeakBialgebra pair_groupoid_algebra(std::size_t k, Field field = Field::rational());
/// The one-dimensional bialgebra F.
WeakBialgebra trivial_bialgebra(Field field = Field::rational());

/// F, F[Z/2], F[Z/3], F[S3], and the pair groupoids for k = 1, 2, 3.
std::vector<WeakBialgebra> example_zoo(Field field = Field::rational());
/// Names: f, z2, z3, s3, m1, m2, m3. Throws Error for unknown names.
WeakBialgebra builtin_bialgebra(const std::string& name, Field field = Field::rational());
std::vector<std::string> builtin_bialgebra_names();

/// Broken variants of zoo members, each violating some axiom.
std::vector<WeakBialgebra> mutated_bialgebras(Field field = Field::rational());

}  // namespace wreath
