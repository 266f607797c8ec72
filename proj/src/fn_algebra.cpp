#include "sga/fn_algebra.hpp"
#include "sga/errors.hpp"

namespace sga {

Mask support_of(const Vec& f) {
  Mask m = 0;
  for (Eigen::Index i = 0; i < f.cols(); ++i)
    if (f(i) != 0) m = with_bit(m, static_cast<int>(i));
  return m;
}

Vec indicator(Mask m, int n) {
  Vec v = Vec::Zero(n);
  for (int i : bits_of(m)) v(i) = 1;
  return v;
}

Vec InducedAction::apply(int g, const Vec& f) const {
  Vec out = Vec::Zero(dim());
  const int ginv = base.g.inv[g];
  for (int x : bits_of(base.dom[g])) out(x) = f(base.theta[ginv][x]);
  return out;
}

InducedAction induced_action(const PartialAction& a, int p) {
  require_prime(p);
  InducedAction r{a, p};
  const int n = a.g.num_morphisms();

  // alpha_g must map the basis of D_{g⁻¹} bijectively onto the basis of D_g
  // multiplicatively; units act as identities; composition is compatible.
  for (int g = 0; g < n; ++g) {
    const int ginv = a.g.inv[g];
    Mask image = 0;
    for (int x : bits_of(a.dom[ginv])) {
      Vec e = indicator(with_bit(0, x), r.dim());
      Vec img = r.apply(g, e);
      const Mask s = support_of(img);
      if (popcount(s) != 1 || !subset(s, a.dom[g]))
        throw ValidationError("induced map of '" + a.g.morphism_ids[g] +
                              "' does not send point masses to point masses in its domain");
      image |= s;
    }
    if (image != a.dom[g])
      throw ValidationError("induced map of '" + a.g.morphism_ids[g] +
                            "' is not onto its domain ideal");
  }
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h) {
      if (!a.g.composable(gg, h)) continue;
      const int gh = a.g.comp(gg, h);
      const Mask inter = a.dom[a.g.inv[gg]] & a.dom[h];
      for (int x : bits_of(inter)) {
        Vec e = indicator(with_bit(0, a.theta[a.g.inv[h]][x]), r.dim());
        if (r.apply(gg, r.apply(h, e)) != r.apply(gh, e))
          throw ValidationError("induced action is not compatible on ('" +
                                a.g.morphism_ids[gg] + "','" + a.g.morphism_ids[h] + "')");
      }
    }
  return r;
}

Subspace ideal_from_open(const InducedAction& r, Mask u) {
  if (!subset(u, r.base.all_points()))
    throw ValidationError("subset lies outside the point set");
  Mat rows(popcount(u), r.dim());
  int k = 0;
  for (int x : bits_of(u)) rows.row(k++) = indicator(with_bit(0, x), r.dim());
  return make_subspace(std::move(rows), r.dim(), r.p);
}

Mask support_of_ideal(const InducedAction& r, const Subspace& j) {
  Mask u = 0;
  for (Eigen::Index i = 0; i < j.basis.rows(); ++i) u |= support_of(j.basis.row(i));
  if (!(ideal_from_open(r, u) == j))
    throw ValidationError("subspace is not an ideal of the function algebra");
  return u;
}

bool is_G_simple(const InducedAction& r) { return invariant_subsets(r.base).size() <= 2; }

bool is_G_prime(const InducedAction& r) {
  const auto inv = invariant_subsets(r.base);
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = i; j < inv.size(); ++j) {
      if (inv[i] == 0 || inv[j] == 0) continue;
      if ((inv[i] & inv[j]) == 0) return false;
    }
  return true;
}

InducedAction quotient_action(const InducedAction& r, Mask u) {
  if (!is_invariant(r.base, u))
    throw ValidationError("quotient requires an invariant ideal");
  const Mask rest = r.base.all_points() & ~u;
  InducedAction q = induced_action(restrict_to(r.base, rest), r.p);
  // Canonical identification (D_g + J)/J ≅ functions on X_g \ u, checked
  // dimension-wise per morphism.
  for (int g = 0; g < r.base.g.num_morphisms(); ++g) {
    const int lhs = popcount(r.base.dom[g] | u) - popcount(u);
    const int rhs = popcount(q.base.dom[g]);
    if (lhs != rhs)
      throw ValidationError("quotient action dimension mismatch at '" +
                            r.base.g.morphism_ids[g] + "'");
  }
  return q;
}

} // namespace sga
