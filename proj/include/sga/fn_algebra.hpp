#ifndef SGA_FN_ALGEBRA_HPP
#define SGA_FN_ALGEBRA_HPP

// The commutative coefficient algebra R of functions X -> F_p attached to a
// partial action, together with the induced algebraic action:
//   D_g = { f : supp(f) ⊆ X_g },   alpha_g(f) = f ∘ theta_{g⁻¹} on X_g.
// Every ideal of F_p^X is determined by its support, so R-level ideals are
// represented by point subsets; the subspace machinery in the ideal-lattice
// module exercises the same objects as row spaces for cross-checking.

#include "sga/fpla.hpp"
#include "sga/partial_action.hpp"

namespace sga {

Mask support_of(const Vec& f);

Vec indicator(Mask m, int n);

struct InducedAction {
  PartialAction base;
  int p = 2;

  int dim() const { return base.num_points(); }

  /// alpha_g applied to a coefficient vector supported in X_{g⁻¹}.
  Vec apply(int g, const Vec& f) const;

  /// The identity of D_g, i.e. the indicator of X_g.
  Vec domain_identity(int g) const { return indicator(base.dom[g], dim()); }
};

/// Builds the induced action and re-checks the ring-action axioms
/// algebraically on basis vectors (each alpha_g a multiplicative bijection
/// D_{g⁻¹} -> D_g, units acting as identities, composition compatible).
InducedAction induced_action(const PartialAction& a, int p);

/// Ideal of R attached to a subset: everything supported inside it.
Subspace ideal_from_open(const InducedAction& r, Mask u);

/// Union of the supports of an ideal's elements.  Throws if the subspace is
/// not an ideal of R (i.e. not spanned by coordinate vectors).
Mask support_of_ideal(const InducedAction& r, const Subspace& j);

/// Only invariant subsets are the empty set and everything.
bool is_G_simple(const InducedAction& r);

/// No two disjoint nonempty invariant subsets (products of subset ideals of
/// F_p^X vanish exactly when the supports are disjoint).
bool is_G_prime(const InducedAction& r);

/// Quotient of the action by the invariant ideal supported on u, realized as
/// the induced action on the complementary invariant subset.  Checks the
/// canonical identifications dimension-wise.
InducedAction quotient_action(const InducedAction& r, Mask u);

} // namespace sga

#endif
