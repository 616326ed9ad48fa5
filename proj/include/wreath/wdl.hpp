#pragma once

#include <string>

#include "wreath/algebra.hpp"
#include "wreath/report.hpp"

namespace wreath {

/// lambda: t (x) s -> s (x) t between two demimonads on the same object.
struct WeakDistributiveLaw {
  Demimonad t;
  Demimonad s;
  LinMap lambda;

  const Field& field() const { return lambda.field(); }
};

/// The flip t (x) s -> s (x) t, a strict distributive law.
WeakDistributiveLaw flip_law(const Demimonad& t, const Demimonad& s);

/// The four compatibility diagrams with mul and unit, the agreement of the two
/// paths defining lambda_bar, and the normalization of lambda by the
/// idempotents of t and s. Throws ShapeMismatch if lambda does not map
/// t (x) s to s (x) t.
Report check_wdl(const WeakDistributiveLaw& w);

/// (s (x) mu_t).(lambda (x) t).(eta_t (x) s (x) t)
LinMap lambda_bar_left(const WeakDistributiveLaw& w);
/// (mu_s (x) t).(s (x) lambda).(s (x) t (x) eta_s)
LinMap lambda_bar_right(const WeakDistributiveLaw& w);
/// Common value of both paths; throws PathsDisagree if they differ.
LinMap lambda_bar(const WeakDistributiveLaw& w);

/// The identities every weak distributive law satisfies: lambda_bar absorbs
/// lambda and the multiplications, and the two unit-insertion squares.
Report check_wdl_identities(const WeakDistributiveLaw& w);

/// Monad morphism (v, xi): (A, source) -> (A, target) with
/// xi: target (x) v -> v (x) source. carrier_idem is the idempotent of v.
struct MonadMorphism {
  Demimonad source;
  Demimonad target;
  Space carrier;
  LinMap carrier_idem;
  LinMap xi;
};

/// Compatibility with mul and unit plus normalization by the idempotents.
Report check_monad_morphism(const MonadMorphism& m);
MonadMorphism identity_morphism(const Demimonad& t);
/// g after f: carrier v_g (x) v_f, structure (v_g (x) xi_f).(xi_g (x) v_f).
MonadMorphism compose_morphisms(const MonadMorphism& g, const MonadMorphism& f);
/// Equality of carriers and structure maps.
bool same_morphism(const MonadMorphism& a, const MonadMorphism& b);

/// 1-cell w -> w2 given by v with xi_t: t2 (x) v -> v (x) t and
/// xi_s: s2 (x) v -> v (x) s.
struct WdlOneCell {
  Space carrier;
  LinMap carrier_idem;
  LinMap xi_t;
  LinMap xi_s;
};

/// Both monad-morphism laws and the compatibility of xi_t, xi_s with the laws.
Report check_wdl_one_cell(const WdlOneCell& c, const WeakDistributiveLaw& w,
                          const WeakDistributiveLaw& w2);
WdlOneCell identity_one_cell(const WeakDistributiveLaw& w);
/// g after f, as for monad morphisms.
WdlOneCell compose_one_cells(const WdlOneCell& g, const WdlOneCell& f);

struct WeakWreath {
  Demimonad d;             // on s (x) t
  MonadMorphism proj_t;    // (A, s t) -> (A, t), structure lambda.(t (x) eta_s)
  MonadMorphism proj_s;    // (A, s t) -> (A, s), structure lambda.(eta_t (x) s)
};

/// mul = (mu_s (x) mu_t).(s (x) lambda (x) t), unit = lambda.(eta_t (x) eta_s).
/// Throws InvalidLaw if w fails check_wdl.
WeakWreath weak_wreath(const WeakDistributiveLaw& w);

/// Monad morphism between the wreath demimonads with structure
/// (v (x) lambda_bar).(xi_s (x) t).(s2 (x) xi_t). Throws InvalidOneCell.
MonadMorphism wreath_one_cell(const WdlOneCell& c, const WeakDistributiveLaw& w,
                              const WeakDistributiveLaw& w2);

struct BinaryFactorization {
  WeakDistributiveLaw law;  // lambda = iota.mu_r.(alpha (x) beta)
  LinMap pi;                // mu_r.(beta (x) alpha): s (x) t -> r
  Report report;
  /// r is an honest algebra but iota.pi is not the identity.
  bool strict_mismatch = false;
};

/// Recovers a weak distributive law from a demimonad r with monad morphisms
/// alpha: t -> r, beta: s -> r and a bimodule section iota: r -> s (x) t of
/// pi. Throws PreconditionFailure naming condition (a) or (b).
BinaryFactorization binary_factorize(const Demimonad& r, const Demimonad& t, const Demimonad& s,
                                     const LinMap& alpha, const LinMap& beta,
                                     const LinMap& iota);

/// Factorizes weak_wreath(w) through its projections with iota = lambda_bar
/// and compares the recovered law with w.
Report wreath_round_trip(const WeakDistributiveLaw& w);

}  // namespace wreath
