#ifndef SGA_GROUPOID_HPP
#define SGA_GROUPOID_HPP

// Finite groupoids: a small category in which every morphism is invertible.
// Identity morphisms are identified with objects, so the unit space embeds
// into the morphism set.  Composition tables are fully materialized.

#include <Eigen/Dense>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sga {

/// Hard cap on the morphism count accepted by validation.  Downstream ideal
/// enumeration is exponential in the derived dimensions; failing early beats
/// an unbounded run.
inline constexpr int kMaxMorphisms = 64;

/// Untrusted groupoid description, as read from JSON or built by hand.
struct RawGroupoid {
  struct Morphism {
    std::string id, src, dst;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identity;  // object id -> morphism id
  std::map<std::string, std::string> inverse;   // morphism id -> morphism id
  std::vector<std::array<std::string, 3>> compose;  // (g, h, g∘h), exactly the composable pairs
};

/// Validated groupoid.  Objects and morphisms are indexed in lexicographic
/// id order, so every enumeration over them is deterministic.
struct Groupoid {
  std::vector<std::string> object_ids;
  std::vector<std::string> morphism_ids;
  std::vector<int> src;    // morphism -> object
  std::vector<int> dst;    // morphism -> object
  std::vector<int> unit;   // object -> morphism
  std::vector<int> inv;    // morphism -> morphism
  Eigen::MatrixXi comp;    // comp(g, h) = g∘h when src[g] == dst[h], else -1

  int num_objects() const { return static_cast<int>(object_ids.size()); }
  int num_morphisms() const { return static_cast<int>(morphism_ids.size()); }
  bool composable(int g, int h) const { return src[g] == dst[h]; }
  int compose(int g, int h) const { return comp(g, h); }
  bool is_unit(int g) const { return unit[src[g]] == g && src[g] == dst[g]; }
  int object_index(const std::string& id) const;    // throws on unknown id
  int morphism_index(const std::string& id) const;  // throws on unknown id
};

/// Checks every groupoid axiom exhaustively; throws ValidationError naming
/// the first violated axiom together with the offending morphisms.
Groupoid validate(const RawGroupoid& raw);

/// Re-checks the axioms on an already-indexed groupoid (used for derived
/// constructions such as transformation groupoids).
void check_axioms(const Groupoid& g);

/// Isotropy group at an object: all morphisms with source and range there.
std::vector<int> isotropy_group(const Groupoid& g, int object);
std::vector<std::string> isotropy_group(const Groupoid& g, const std::string& object_id);

/// One-object groupoid from a group's Cayley table (table[i][j] = index of
/// element i * element j).  Throws if the table is not a group.
Groupoid from_group(const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& table);

/// Groupoid with n objects and n^2 morphisms (i,j) : j -> i,
/// composing as (i,j)(j,k) = (i,k).
Groupoid pair_groupoid(int n);

/// All composable pairs (g, h) with src[g] == dst[h], in index order.
std::vector<std::pair<int, int>> composable_pairs(const Groupoid& g);

/// Disjoint union; ids are prefixed to keep them unique.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b,
                        const std::string& prefix_a = "a:",
                        const std::string& prefix_b = "b:");

RawGroupoid to_raw(const Groupoid& g);

} // namespace sga

#endif
