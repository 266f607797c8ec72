#ifndef SGA_STONE_DUAL_HPP
#define SGA_STONE_DUAL_HPP

// Finite Stone duality for the idempotents of F_p^Y.  The idempotents are
// the 0/1 vectors, which form the powerset Boolean algebra on Y with
//   e ∨ f = e + f - ef,   e ∧ f = ef,   ¬e = 1 - e.
// Ultrafilters of a finite Boolean algebra are exactly the principal filters
// at atoms, so the Stone dual is the atom set.  An algebraically presented
// partial action (unital ideals given by their identity idempotents and ring
// isomorphisms given as matrices) induces a topological partial action on
// the dual, recovered here and checked to be equivariant with the original.

#include "sga/fn_algebra.hpp"
#include "sga/report.hpp"

namespace sga {

/// Powerset Boolean algebra on a finite atom set; elements are masks.
struct BooleanAlgebra {
  std::vector<std::string> atom_ids;

  int atoms() const { return static_cast<int>(atom_ids.size()); }
  Mask top() const { return full_mask(atoms()); }
  Mask meet(Mask a, Mask b) const { return a & b; }
  Mask join(Mask a, Mask b) const { return a | b; }
  Mask complement(Mask a) const { return top() & ~a; }

  /// Upward closure of a set of elements: everything dominating some member.
  std::vector<Mask> upset(const std::vector<Mask>& p) const;
};

/// Stone dual of a finite Boolean algebra: one ultrafilter per atom, with
/// the basic sets Z_e = { ultrafilters containing e }.
struct StoneDual {
  BooleanAlgebra algebra;
  int points() const { return algebra.atoms(); }
  /// Z_e as a set of atoms; for the powerset algebra this is e itself.
  Mask basic_set(Mask e) const { return e; }
  /// The principal ultrafilter at an atom, listed as the elements above it.
  std::vector<Mask> ultrafilter(int atom) const;
};

/// All idempotents of F_p^Y organized as the powerset algebra on Y.
BooleanAlgebra idempotents(int num_points, const std::vector<std::string>& ids);

StoneDual ultrafilters(const BooleanAlgebra& b);

/// Algebraic presentation of a partial action on R = F_p^Y: per morphism a
/// unital ideal cut out by its identity idempotent and a ring isomorphism
/// given as a matrix acting on coefficient rows.
struct IdempotentAction {
  Groupoid g;
  int p = 2;
  std::vector<std::string> point_ids;
  std::vector<Mask> unit_idem;  // morphism -> identity idempotent of D_g
  std::vector<Mat> tau;         // morphism -> matrix of tau_g on rows

  int dim() const { return static_cast<int>(point_ids.size()); }
};

/// Reads the induced algebraic action back as matrices.
IdempotentAction algebraic_presentation(const InducedAction& r);

/// Checks: each tau_g maps point masses of D_{g⁻¹} to point masses of D_g
/// bijectively (ring isomorphism over F_p), units act identically, domains
/// nest along ranges, and composition is compatible.
void validate_idempotent_action(const IdempotentAction& t);

/// The induced topological partial action on the Stone dual: the domain of
/// g is the basic set of its identity idempotent and the point map is read
/// off by pushing principal ultrafilters through tau and closing up.
PartialAction induced_theta(const IdempotentAction& t);

/// Equivariance of the algebraic action with the function-algebra action of
/// the induced dual action, checked on basis idempotents.
std::vector<CheckResult> check_equivariance(const IdempotentAction& t);

/// Round trip: induced_theta(algebraic_presentation(induced_action(a))) == a.
std::vector<CheckResult> check_stone_round_trip(const PartialAction& a, int p);

} // namespace sga

#endif
