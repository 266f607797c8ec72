#ifndef SGA_SKEW_RING_HPP
#define SGA_SKEW_RING_HPP

// The skew groupoid ring attached to an induced action: formal sums
// sum_g a_g d_g with a_g supported in X_g, multiplied by
//   a_g d_g * b_h d_h = alpha_g(alpha_{g⁻¹}(a_g) b_h) d_{gh}
// when (g,h) is composable and 0 otherwise.  The ring is graded by the
// groupoid with homogeneous components D_g d_g, and since every D_e is
// unital with finitely many units, the ring is unital.
//
// Elements are stored sparsely by morphism and densely by point; dense
// coordinate vectors in the canonical monomial basis { 1_x d_g } are used
// for all linear algebra.

#include "sga/fn_algebra.hpp"

#include <map>

namespace sga {

struct SkewElement {
  std::map<int, Vec> comp;  // morphism -> coefficient vector over the points

  bool is_zero() const { return comp.empty(); }
  bool operator==(const SkewElement& o) const { return comp == o.comp; }
};

struct SkewRing {
  InducedAction r;
  std::vector<std::pair<int, int>> basis;  // (morphism, point), canonical order
  Eigen::MatrixXi index;                   // (morphism, point) -> basis index or -1
  Eigen::MatrixXi prod;                    // prod(i, j) = basis index of m_i * m_j or -1

  int dim() const { return static_cast<int>(basis.size()); }
  int p() const { return r.p; }
  int points() const { return r.dim(); }
  int basis_index(int g, int x) const { return index(g, x); }
};

SkewRing make_skew_ring(InducedAction r);
inline SkewRing make_skew_ring(const PartialAction& a, int p) {
  return make_skew_ring(induced_action(a, p));
}

SkewElement from_dense(const SkewRing& s, const Vec& coords);
Vec to_dense(const SkewRing& s, const SkewElement& e);

SkewElement add(const SkewRing& s, const SkewElement& a, const SkewElement& b);
SkewElement multiply(const SkewRing& s, const SkewElement& a, const SkewElement& b);
Vec multiply_dense(const SkewRing& s, const Vec& a, const Vec& b);

/// Requires the element's coefficients to be supported in the right domains.
void check_element(const SkewRing& s, const SkewElement& e);

/// sum_e 1_{X_e} d_e, the multiplicative identity.
SkewElement identity_element(const SkewRing& s);
Vec identity_dense(const SkewRing& s);

/// Sum of the unit-indexed coefficients, landing in the function algebra.
Vec unit_projection(const SkewRing& s, const SkewElement& e);
Vec unit_projection_dense(const SkewRing& s, const Vec& coords);

/// f = sum of its block components f|X_e mapped to sum f|X_e d_e.
SkewElement unit_embedding(const SkewRing& s, const Vec& f);

/// unit_embedding ∘ unit_projection: the bimodule projection onto the
/// subring spanned by the unit components.
SkewElement conditional_expectation(const SkewRing& s, const SkewElement& e);

/// Sum of all coefficient vectors.
Vec coefficient_sum(const SkewRing& s, const SkewElement& e);

Vec homogeneous_component(const SkewRing& s, const SkewElement& e, int g);
bool is_homogeneous(const SkewElement& e);

/// Coordinate subspace spanned by the unit-morphism monomials (the copy of
/// the function algebra inside the skew ring).
Subspace unit_subring(const SkewRing& s);

/// Quotient by the invariant ideal supported on u, with the projection onto
/// the quotient ring and the embedding of the kernel ring; the triple forms
/// a short exact sequence, which make_quotient verifies.
struct SkewQuotient {
  SkewRing quotient;   // ring over the restriction to the complement of u
  SkewRing kernel;     // ring over the restriction to u
  Mat projection;      // dim x dim(quotient), acting on row coordinate vectors
  Mat embedding;       // dim(kernel) x dim
};

SkewQuotient make_quotient(const SkewRing& s, Mask u);

} // namespace sga

#endif
