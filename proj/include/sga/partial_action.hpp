#ifndef SGA_PARTIAL_ACTION_HPP
#define SGA_PARTIAL_ACTION_HPP

// Partial actions of a finite groupoid on a finite point set.  A partial
// action assigns to each morphism g a subset X_g of the point set and a
// bijection theta_g : X_{g⁻¹} -> X_g, subject to:
//   (domain containment)   X_g ⊆ X_{r(g)}
//   (unit identity)        theta_e = id on X_e for every unit e
//   (composition domain)   theta_{h⁻¹}(X_{g⁻¹} ∩ X_h) ⊆ X_{(gh)⁻¹}
//   (compatibility)        theta_g(theta_h(x)) = theta_{gh}(x) where defined
// together with the standing hypothesis that the point set is the disjoint
// union of the unit domains X_e.
//
// The point set carries the discrete topology, under which every subset is
// clopen and interiors are identities.  The dynamical checkers below state
// the topological definitions literally; on a finite discrete space they
// collapse to the pointwise criteria noted next to each operation.

#include "sga/bits.hpp"
#include "sga/groupoid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sga {

inline constexpr int kMaxPoints = 32;

struct RawPartialAction {
  RawGroupoid groupoid;
  struct Point {
    std::string id, unit;  // unit = object id of the block containing this point
  };
  std::vector<Point> points;
  std::map<std::string, std::vector<std::string>> domain;        // g -> X_g
  std::map<std::string, std::map<std::string, std::string>> map; // g -> theta_g on X_{g⁻¹}
};

struct PartialAction {
  Groupoid g;
  std::vector<std::string> point_ids;       // lexicographic order
  std::vector<int> unit_of;                 // point -> object index
  std::vector<Mask> dom;                    // morphism -> X_g as bitmask
  std::vector<std::vector<int>> theta;      // theta[g][x] = image if x in X_{g⁻¹}, else -1

  int num_points() const { return static_cast<int>(point_ids.size()); }
  Mask all_points() const { return full_mask(num_points()); }
  Mask block(int object) const;             // points labeled with this unit
  int point_index(const std::string& id) const;
  int apply(int morphism, int point) const { return theta[morphism][point]; }
  Mask image(int morphism, Mask s) const;   // theta_g(s ∩ X_{g⁻¹})
};

PartialAction validate(const RawPartialAction& raw);
void check_axioms(const PartialAction& a);

/// True iff X_g = X_{r(g)} for every morphism.
bool is_global(const PartialAction& a);

/// Global actions on a fibred set: anchor map plus a total action on the
/// pullback { (g, x) : s(g) = anchor(x) }.
struct FibredAction {
  Groupoid g;
  std::vector<std::string> point_ids;
  std::vector<int> anchor;                  // point -> object
  std::vector<std::vector<int>> act;        // act[g][x] = g·x when s(g) = anchor(x), else -1
};

FibredAction to_fibred(const PartialAction& a);     // requires is_global
PartialAction from_fibred(const FibredAction& f);   // checks the fibred axioms

/// Orbit of a point: everything reachable by defined translates.
Mask orbit(const PartialAction& a, int point);

/// Subsets M with theta_g(X_{g⁻¹} ∩ M) ⊆ M for all g.  Computed as unions of
/// orbits; the exhaustive subset scan is kept in the tests as an oracle.
/// Sorted by (size, mask value).
std::vector<Mask> invariant_subsets(const PartialAction& a);

bool is_invariant(const PartialAction& a, Mask m);

/// No invariant subset besides the empty set and everything.  (Discrete
/// topology: every subset is open, so this is literal minimality.)
bool is_minimal(const PartialAction& a);

/// For all nonempty U, V there is g with theta_g(U ∩ X_{g⁻¹}) ∩ V nonempty.
/// On a discrete space the singleton criterion is equivalent and is what is
/// implemented: every point reaches every point.
bool is_topologically_transitive(const PartialAction& a);

/// { x in X_{t⁻¹} : theta_t(x) = x }.
Mask fixed_points(const PartialAction& a, int t);

/// Topological freeness on the subset F: for every unit u and every non-unit
/// isotropy morphism t at u, the fixed set of theta_t inside F has empty
/// interior relative to F.  Discrete space: the fixed set itself is empty.
bool is_topologically_free_on(const PartialAction& a, Mask f);

bool is_topologically_free(const PartialAction& a);

/// Topologically free on every invariant subset (all subsets are closed here).
bool is_residually_topologically_free(const PartialAction& a);

/// Restriction to an invariant subset, with points renumbered but ids kept.
PartialAction restrict_to(const PartialAction& a, Mask m);

struct ActionBounds {
  int max_points = 4;
  int max_morphisms = 6;
  int max_skew_dim = 0;   // 0 = unbounded; otherwise resample until sum |X_g| fits
  int retries = 64;
};

/// Deterministic-from-seed valid partial action within the bounds.
PartialAction random_instance(std::uint64_t seed, const ActionBounds& bounds);

RawPartialAction to_raw(const PartialAction& a);

/// Stable fingerprint of the full structure (used to seed sampled checks
/// and to deduplicate corpora).
std::string fingerprint(const PartialAction& a);

} // namespace sga

#endif
