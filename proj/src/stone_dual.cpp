#include "sga/stone_dual.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <set>

namespace sga {

std::vector<Mask> BooleanAlgebra::upset(const std::vector<Mask>& p) const {
  std::set<Mask> out;
  for (Mask e = 0; e <= top(); ++e) {
    for (Mask z : p)
      if (meet(z, e) == z) { out.insert(e); break; }
    if (e == top()) break;  // Mask overflow guard when atoms == 64
  }
  return {out.begin(), out.end()};
}

std::vector<Mask> StoneDual::ultrafilter(int atom) const {
  std::vector<Mask> out;
  const Mask a = with_bit(0, atom);
  for (Mask e = 0; e <= algebra.top(); ++e) {
    if (subset(a, e)) out.push_back(e);
    if (e == algebra.top()) break;
  }
  return out;
}

BooleanAlgebra idempotents(int num_points, const std::vector<std::string>& ids) {
  if (num_points > 20) throw CapExceeded("Boolean algebra too large to materialize");
  BooleanAlgebra b;
  b.atom_ids = ids;
  b.atom_ids.resize(static_cast<std::size_t>(num_points));
  return b;
}

StoneDual ultrafilters(const BooleanAlgebra& b) { return StoneDual{b}; }

IdempotentAction algebraic_presentation(const InducedAction& r) {
  IdempotentAction t;
  t.g = r.base.g;
  t.p = r.p;
  t.point_ids = r.base.point_ids;
  const int n = t.g.num_morphisms();
  const int d = r.dim();
  t.unit_idem.assign(n, 0);
  t.tau.assign(n, Mat::Zero(d, d));
  for (int g = 0; g < n; ++g) {
    t.unit_idem[g] = r.base.dom[g];
    for (int x : bits_of(r.base.dom[t.g.inv[g]]))
      t.tau[g].row(x) = r.apply(g, indicator(with_bit(0, x), d));
  }
  validate_idempotent_action(t);
  return t;
}

namespace {

Vec apply_tau(const IdempotentAction& t, int g, const Vec& v) {
  return mul(v, t.tau[g], t.p);
}

bool is_idempotent_vec(const Vec& v) {
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    if (v(i) != 0 && v(i) != 1) return false;
  return true;
}

} // namespace

void validate_idempotent_action(const IdempotentAction& t) {
  const Groupoid& g = t.g;
  const int n = g.num_morphisms();
  const int d = t.dim();

  // The identity idempotents of the unit ideals must partition the points.
  Mask total = 0;
  for (int e = 0; e < g.num_objects(); ++e) {
    const Mask ue = t.unit_idem[g.unit[e]];
    if ((total & ue) != 0)
      throw ValidationError("unit ideals are not independent");
    total |= ue;
  }
  if (total != full_mask(d))
    throw ValidationError("unit ideals do not sum to the whole algebra");

  for (int m = 0; m < n; ++m) {
    if (!subset(t.unit_idem[m], t.unit_idem[g.unit[g.dst[m]]]))
      throw ValidationError("domain idempotent of '" + g.morphism_ids[m] +
                            "' is not below its range unit");
    // tau_m maps point masses of D_{m⁻¹} to point masses of D_m, bijectively.
    Mask image = 0;
    for (int x : bits_of(t.unit_idem[g.inv[m]])) {
      const Vec img = apply_tau(t, m, indicator(with_bit(0, x), d));
      if (!is_idempotent_vec(img) || popcount(support_of(img)) != 1 ||
          !subset(support_of(img), t.unit_idem[m]))
        throw ValidationError("map of '" + g.morphism_ids[m] +
                              "' is not a ring isomorphism onto its domain ideal");
      image |= support_of(img);
    }
    if (image != t.unit_idem[m])
      throw ValidationError("map of '" + g.morphism_ids[m] + "' is not onto its domain ideal");
    // Off-domain rows must vanish.
    for (int x = 0; x < d; ++x)
      if (!bit(t.unit_idem[g.inv[m]], x) && !t.tau[m].row(x).isZero())
        throw ValidationError("map of '" + g.morphism_ids[m] + "' acts outside its domain");
  }
  for (int e = 0; e < g.num_objects(); ++e) {
    const int u = g.unit[e];
    for (int x : bits_of(t.unit_idem[u]))
      if (apply_tau(t, u, indicator(with_bit(0, x), d)) != indicator(with_bit(0, x), d))
        throw ValidationError("unit map of object '" + g.object_ids[e] +
                              "' is not the identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!g.composable(a, b)) continue;
      const int ab = g.comp(a, b);
      // tau_{b⁻¹}(D_{a⁻¹} ∧ D_b) must land under D_{(ab)⁻¹}, with
      // tau_a ∘ tau_b = tau_{ab} there.
      const Mask inter = t.unit_idem[g.inv[a]] & t.unit_idem[b];
      for (int x : bits_of(inter)) {
        const Vec moved = apply_tau(t, g.inv[b], indicator(with_bit(0, x), d));
        if (!subset(support_of(moved), t.unit_idem[g.inv[ab]]))
          throw ValidationError("composition domain fails for ('" + g.morphism_ids[a] + "','" +
                                g.morphism_ids[b] + "')");
        if (apply_tau(t, a, apply_tau(t, b, moved)) != apply_tau(t, ab, moved))
          throw ValidationError("composition compatibility fails for ('" + g.morphism_ids[a] +
                                "','" + g.morphism_ids[b] + "')");
      }
    }
}

PartialAction induced_theta(const IdempotentAction& t) {
  validate_idempotent_action(t);
  const Groupoid& g = t.g;
  const int d = t.dim();

  PartialAction a;
  a.g = g;
  a.point_ids = t.point_ids;
  a.unit_of.assign(d, -1);
  for (int e = 0; e < g.num_objects(); ++e)
    for (int x : bits_of(t.unit_idem[g.unit[e]])) a.unit_of[x] = e;

  const int n = g.num_morphisms();
  a.dom.assign(n, 0);
  for (int m = 0; m < n; ++m) a.dom[m] = t.unit_idem[m];
  a.theta.assign(n, std::vector<int>(std::max(d, 1), -1));

  for (int m = 0; m < n; ++m) {
    const Mask dom_m = t.unit_idem[g.inv[m]];
    for (int y : bits_of(dom_m)) {
      // Principal ultrafilter at y, cut down to the domain ideal:
      // { u_{m⁻¹} ∧ e : e contains y } = idempotents of D_{m⁻¹} above y.
      std::vector<int> dom_bits = bits_of(dom_m);
      std::vector<Mask> image_filter;
      for (Mask pickbits = 0; pickbits < (Mask{1} << dom_bits.size()); ++pickbits) {
        Mask e = 0;
        for (std::size_t i = 0; i < dom_bits.size(); ++i)
          if (bit(pickbits, static_cast<int>(i))) e = with_bit(e, dom_bits[i]);
        if (!bit(e, y)) continue;
        const Vec img = apply_tau(t, m, indicator(e, d));
        if (!is_idempotent_vec(img))
          throw ValidationError("image of an idempotent is not idempotent");
        image_filter.push_back(support_of(img));
      }
      // The image filter is principal; its minimum is the image atom, and
      // the upward closure in the full algebra is the target ultrafilter.
      Mask min_elem = full_mask(d);
      for (Mask e : image_filter) min_elem &= e;
      if (popcount(min_elem) != 1)
        throw ValidationError("image filter is not an ultrafilter");
      for (Mask e : image_filter)
        if (!subset(min_elem, e)) throw ValidationError("image filter is not upward directed");
      a.theta[m][y] = bits_of(min_elem)[0];
    }
  }
  check_axioms(a);
  return a;
}

std::vector<CheckResult> check_equivariance(const IdempotentAction& t) {
  std::vector<CheckResult> out;
  PartialAction theta;
  try {
    theta = induced_theta(t);
  } catch (const ValidationError& e) {
    out.push_back(check_fail("dual_action_valid", e.what()));
    return out;
  }
  out.push_back(check_pass("dual_action_valid"));

  // For each morphism g and basis idempotent e of the full algebra, the map
  // sending the indicator of a basic subset of U_g to the matching idempotent
  // of D_g must intertwine f -> f ∘ theta_{g⁻¹} with tau_g.
  const InducedAction rho = induced_action(theta, t.p);
  const int d = t.dim();
  bool all_ok = true;
  std::string witness;
  const int atoms = d;
  const bool exhaustive = atoms <= 10;
  std::vector<Mask> idems;
  if (exhaustive) {
    for (Mask e = 0; e < (Mask{1} << atoms); ++e) idems.push_back(e);
  } else {
    for (int x = 0; x < atoms; ++x) idems.push_back(with_bit(0, x));
    idems.push_back(full_mask(atoms));
  }
  for (int m = 0; m < t.g.num_morphisms() && all_ok; ++m) {
    const Mask u_inv = t.unit_idem[t.g.inv[m]];
    for (Mask e : idems) {
      // phi_{g⁻¹}(1_{Z_{e∧u}}) = e∧u; push both ways around the square.
      const Mask cut = e & u_inv;
      const Vec lhs = rho.apply(m, indicator(cut, d));      // rho_g then phi_g (identity on coords)
      const Vec rhs = apply_tau(t, m, indicator(cut, d));   // phi then tau_g
      if (lhs != rhs) {
        all_ok = false;
        witness = "morphism '" + t.g.morphism_ids[m] + "', idempotent mask " + std::to_string(e);
        break;
      }
    }
  }
  out.push_back(check_bool("dual_action_equivariance", all_ok, witness));
  return out;
}

std::vector<CheckResult> check_stone_round_trip(const PartialAction& a, int p) {
  std::vector<CheckResult> out;
  try {
    const IdempotentAction t = algebraic_presentation(induced_action(a, p));
    const PartialAction back = induced_theta(t);
    const bool same = fingerprint(back) == fingerprint(a);
    out.push_back(check_bool("stone_round_trip", same,
                             "recovered action differs from the original"));
    auto eq = check_equivariance(t);
    out.insert(out.end(), eq.begin(), eq.end());
  } catch (const ValidationError& e) {
    out.push_back(check_fail("stone_round_trip", e.what()));
  }
  return out;
}

} // namespace sga
