#ifndef SGA_TRANS_GROUPOID_HPP
#define SGA_TRANS_GROUPOID_HPP

// The transformation groupoid of a partial action: arrows are pairs (g, x)
// with x in X_{g⁻¹}, composing as (v, y)(t, x) = (vt, x) when (v, t) is
// composable and theta_t(x) = y.  Its unit space is a copy of the point set
// via x -> (e, x), and the finite-dimensional algebra of functions on the
// arrows under convolution is isomorphic to the skew ring of the action.

#include "sga/report.hpp"
#include "sga/skew_ring.hpp"

namespace sga {

struct TransGroupoid {
  PartialAction base;
  Groupoid g;                     // validated groupoid of arrows
  std::vector<int> arrow_mor;     // arrow -> morphism of the base groupoid
  std::vector<int> arrow_pt;      // arrow -> point of X_{g⁻¹}
  std::vector<int> unit_arrow;    // point -> its unit arrow (the map x -> (e, x))
  std::vector<std::vector<std::pair<int, int>>> factorizations;  // per arrow

  int num_arrows() const { return g.num_morphisms(); }
};

TransGroupoid transformation_groupoid(const PartialAction& a);

/// Every arrow with equal source and range is a unit (interiors are
/// identities on a discrete groupoid).
bool is_effective(const TransGroupoid& t);

/// Invariant subsets of the unit space, as masks over objects of t.g,
/// sorted by (size, value).
std::vector<Mask> invariant_unit_subsets(const TransGroupoid& t);

/// The restriction to every nonempty invariant subset of units is effective.
bool is_strongly_effective(const TransGroupoid& t);

bool is_effective_on(const TransGroupoid& t, Mask unit_subset);

/// No nontrivial invariant subsets of the unit space.
bool is_minimal_groupoid(const TransGroupoid& t);

/// Some arrow joins any given pair of units (singleton criterion).
bool is_topologically_transitive_groupoid(const TransGroupoid& t);

/// Convolution: (f1 * f2)(h) = sum over factorizations h = h1 h2.
Vec convolve(const TransGroupoid& t, const Vec& f1, const Vec& f2, int p);

Vec unit_space_indicator(const TransGroupoid& t);

/// The basis correspondence 1_x d_g -> point mass at (g, theta_{g⁻¹}(x)).
/// Returns the arrow index for each skew-ring basis element.
std::vector<int> steinberg_map(const SkewRing& s, const TransGroupoid& t);

/// Verifies that steinberg_map is a bijection, intertwines the products on
/// all basis pairs, and sends the identity to the unit-space indicator.
std::vector<CheckResult> check_steinberg_iso(const SkewRing& s, const TransGroupoid& t);

/// Structural comparison of the action's dynamics with the groupoid's:
/// minimality, transitivity, invariant-subset transport, freeness vs
/// effectiveness (pointwise and on every invariant subset).
std::vector<CheckResult> check_dynamics_correspondence(const PartialAction& a);

} // namespace sga

#endif
