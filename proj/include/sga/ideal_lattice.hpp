#ifndef SGA_IDEAL_LATTICE_HPP
#define SGA_IDEAL_LATTICE_HPP

// Two-sided ideals of a skew ring, enumerated exactly.  Every ideal is the
// join of the principal ideals of its members, so the complete lattice is
// obtained by closing the set of principal ideals of all nonzero coefficient
// vectors under pairwise sums.  The enumeration cost is bounded by p^dim
// principal closures, so it is capped; graded-only questions bypass the cap
// because graded ideals correspond to invariant subsets of the point set.

#include "sga/skew_ring.hpp"

namespace sga {

/// Default caps on the ambient dimension for full ideal enumeration.
int default_dim_cap(int p);

/// Reads SGA_MAX_DIM if set, otherwise the default cap for p.
int effective_dim_cap(int p);

struct Ideal {
  Subspace space;
  int dim() const { return space.dim(); }
};

/// Smallest two-sided ideal containing the span of the given rows, computed
/// by closing under left and right multiplication by the monomial basis.
Subspace ideal_closure(const SkewRing& s, const Mat& gens);

Ideal ideal_generated_by(const SkewRing& s, const std::vector<SkewElement>& gens);

struct IdealLattice {
  std::vector<Ideal> ideals;  // sorted by (dim, lexicographic basis)
  int size() const { return static_cast<int>(ideals.size()); }
};

/// The complete two-sided ideal lattice.  Throws CapExceeded when dim(s)
/// exceeds the cap or the lattice grows past lattice_cap entries.
IdealLattice all_ideals(const SkewRing& s, int dim_cap, int lattice_cap = 1 << 14);

bool is_graded_ideal(const SkewRing& s, const Subspace& ideal);

/// The invariant subset supporting the unit-diagonal part of an ideal:
/// support of unit_projection(I ∩ A) inside the function algebra.
Mask invariant_support_of_ideal(const SkewRing& s, const Subspace& ideal);

/// Image of the unit-projection of the whole ideal (not just its diagonal
/// part); also an invariant subset.
Mask unit_projection_support(const SkewRing& s, const Subspace& ideal);

/// The graded ideal attached to an invariant subset u: the span of the
/// monomials 1_x d_g with x in X_g ∩ u.
Ideal graded_ideal_from_subset(const SkewRing& s, Mask u);

Ideal ideal_product(const SkewRing& s, const Ideal& a, const Ideal& b);

/// Every nonzero ideal meets the unit subring nontrivially.
bool has_intersection_property(const SkewRing& s, const IdealLattice& lattice);

/// The intersection property survives every quotient by an invariant ideal.
bool has_residual_intersection_property(const SkewRing& s, int dim_cap);

bool is_simple(const IdealLattice& lattice);
bool is_prime(const SkewRing& s, const IdealLattice& lattice);

/// Quantify over graded ideals only; these are exactly the ideals attached
/// to invariant subsets, so no enumeration cap applies.
bool is_graded_simple(const SkewRing& s);
bool is_graded_prime(const SkewRing& s);

/// Solution space of v*b = b*v against every monomial of the unit subring.
Subspace centralizer_of_units(const SkewRing& s);

/// The unit subring equals its own centralizer.
bool is_unit_subring_maximal_commutative(const SkewRing& s);

} // namespace sga

#endif
