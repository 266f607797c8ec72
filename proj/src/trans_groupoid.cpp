#include "sga/trans_groupoid.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <functional>

namespace sga {

TransGroupoid transformation_groupoid(const PartialAction& a) {
  TransGroupoid t;
  t.base = a;
  const Groupoid& g = a.g;
  const int n = g.num_morphisms();

  // Arrows (g, x), x in X_{g⁻¹}, in (morphism, point) order.
  std::vector<std::vector<int>> arrow_at(n, std::vector<int>(std::max(a.num_points(), 1), -1));
  for (int m = 0; m < n; ++m)
    for (int x : bits_of(a.dom[g.inv[m]])) {
      arrow_at[m][x] = static_cast<int>(t.arrow_mor.size());
      t.arrow_mor.push_back(m);
      t.arrow_pt.push_back(x);
    }
  const int na = static_cast<int>(t.arrow_mor.size());
  if (na > kMaxMorphisms)
    throw ValidationError("transformation groupoid has " + std::to_string(na) +
                          " arrows; cap is " + std::to_string(kMaxMorphisms));

  // Objects are the unit arrows (e, x); every point yields exactly one.
  Groupoid tg;
  auto arrow_id = [&](int i) {
    return "(" + g.morphism_ids[t.arrow_mor[i]] + "|" + a.point_ids[t.arrow_pt[i]] + ")";
  };
  t.unit_arrow.assign(a.num_points(), -1);
  for (int x = 0; x < a.num_points(); ++x)
    t.unit_arrow[x] = arrow_at[g.unit[a.unit_of[x]]][x];

  for (int x = 0; x < a.num_points(); ++x) tg.object_ids.push_back(arrow_id(t.unit_arrow[x]));
  for (int i = 0; i < na; ++i) tg.morphism_ids.push_back(arrow_id(i));

  // Source (s(g), x); range (r(g), theta_g(x)).
  tg.src.assign(na, -1);
  tg.dst.assign(na, -1);
  tg.inv.assign(na, -1);
  for (int i = 0; i < na; ++i) {
    const int m = t.arrow_mor[i];
    const int x = t.arrow_pt[i];
    const int y = a.theta[m][x];
    tg.src[i] = x;                       // object index == point index
    tg.dst[i] = y;
    tg.inv[i] = arrow_at[g.inv[m]][y];   // (g, x)⁻¹ = (g⁻¹, theta_g(x))
  }
  tg.unit.assign(a.num_points(), -1);
  for (int x = 0; x < a.num_points(); ++x) tg.unit[x] = t.unit_arrow[x];

  // (v, y)(t, x) = (vt, x) when (v, t) composable and theta_t(x) = y.
  tg.comp = Eigen::MatrixXi::Constant(std::max(na, 1), std::max(na, 1), -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const int v = t.arrow_mor[i], y = t.arrow_pt[i];
      const int tm = t.arrow_mor[j], x = t.arrow_pt[j];
      if (!g.composable(v, tm) || a.theta[tm][x] != y) continue;
      tg.comp(i, j) = arrow_at[g.comp(v, tm)][x];
    }

  check_axioms(tg);
  t.g = std::move(tg);

  t.factorizations.assign(na, {});
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const int k = t.g.comp(i, j);
      if (k >= 0) t.factorizations[k].emplace_back(i, j);
    }
  return t;
}

bool is_effective(const TransGroupoid& t) { return is_effective_on(t, full_mask(t.g.num_objects())); }

bool is_effective_on(const TransGroupoid& t, Mask d) {
  for (int m = 0; m < t.num_arrows(); ++m) {
    if (!bit(d, t.g.src[m]) || !bit(d, t.g.dst[m])) continue;
    if (t.g.src[m] == t.g.dst[m] && !t.g.is_unit(m)) return false;
  }
  return true;
}

std::vector<Mask> invariant_unit_subsets(const TransGroupoid& t) {
  const int no = t.g.num_objects();
  // Orbits of units under the arrow relation s(m) ~ r(m).
  std::vector<int> root(no);
  for (int i = 0; i < no; ++i) root[i] = i;
  std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
  for (int m = 0; m < t.num_arrows(); ++m) root[find(t.g.src[m])] = find(t.g.dst[m]);
  std::vector<Mask> orbits;
  std::vector<int> orbit_index(no, -1);
  for (int i = 0; i < no; ++i) {
    const int r = find(i);
    if (orbit_index[r] < 0) {
      orbit_index[r] = static_cast<int>(orbits.size());
      orbits.push_back(0);
    }
    orbits[orbit_index[r]] = with_bit(orbits[orbit_index[r]], i);
  }
  const int k = static_cast<int>(orbits.size());
  std::vector<Mask> out;
  for (Mask pick = 0; pick < (Mask{1} << k); ++pick) {
    Mask m = 0;
    for (int i = 0; i < k; ++i)
      if (bit(pick, i)) m |= orbits[i];
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_strongly_effective(const TransGroupoid& t) {
  for (Mask d : invariant_unit_subsets(t)) {
    if (d == 0) continue;
    if (!is_effective_on(t, d)) return false;
  }
  return true;
}

bool is_minimal_groupoid(const TransGroupoid& t) { return invariant_unit_subsets(t).size() <= 2; }

bool is_topologically_transitive_groupoid(const TransGroupoid& t) {
  const int no = t.g.num_objects();
  std::vector<std::vector<bool>> hit(no, std::vector<bool>(no, false));
  for (int m = 0; m < t.num_arrows(); ++m) hit[t.g.src[m]][t.g.dst[m]] = true;
  for (int u = 0; u < no; ++u)
    for (int v = 0; v < no; ++v)
      if (!hit[u][v]) return false;
  return true;
}

Vec convolve(const TransGroupoid& t, const Vec& f1, const Vec& f2, int p) {
  Vec out = Vec::Zero(t.num_arrows());
  for (int h = 0; h < t.num_arrows(); ++h) {
    long long acc = 0;
    for (const auto& [h1, h2] : t.factorizations[h]) acc += static_cast<long long>(f1(h1)) * f2(h2);
    out(h) = mod_p(acc, p);
  }
  return out;
}

Vec unit_space_indicator(const TransGroupoid& t) {
  Vec v = Vec::Zero(t.num_arrows());
  for (int x : t.unit_arrow) v(x) = 1;
  return v;
}

std::vector<int> steinberg_map(const SkewRing& s, const TransGroupoid& t) {
  if (s.dim() != t.num_arrows())
    throw ValidationError("skew ring and transformation groupoid dimensions differ");
  std::vector<int> to_arrow(s.dim(), -1);
  for (int i = 0; i < s.dim(); ++i) {
    const auto [g, x] = s.basis[i];
    const int y = s.r.base.theta[s.r.base.g.inv[g]][x];
    // locate arrow (g, y)
    int found = -1;
    for (int m = 0; m < t.num_arrows(); ++m)
      if (t.arrow_mor[m] == g && t.arrow_pt[m] == y) { found = m; break; }
    if (found < 0) throw ValidationError("no arrow matches a skew monomial");
    to_arrow[i] = found;
  }
  return to_arrow;
}

std::vector<CheckResult> check_steinberg_iso(const SkewRing& s, const TransGroupoid& t) {
  std::vector<CheckResult> out;
  const int p = s.p();
  std::vector<int> map;
  try {
    map = steinberg_map(s, t);
  } catch (const ValidationError& e) {
    out.push_back(check_fail("steinberg_iso_bijective", e.what()));
    return out;
  }

  std::vector<bool> hit(t.num_arrows(), false);
  bool bijective = true;
  for (int arr : map) {
    if (arr < 0 || hit[arr]) bijective = false;
    else hit[arr] = true;
  }
  out.push_back(check_bool("steinberg_iso_bijective", bijective, "basis map is not injective"));

  bool mult = true;
  std::string witness;
  for (int i = 0; i < s.dim() && mult; ++i)
    for (int j = 0; j < s.dim() && mult; ++j) {
      Vec a = Vec::Zero(t.num_arrows());
      a(map[i]) = 1;
      Vec b = Vec::Zero(t.num_arrows());
      b(map[j]) = 1;
      const Vec conv = convolve(t, a, b, p);
      Vec expected = Vec::Zero(t.num_arrows());
      const int k = s.prod(i, j);
      if (k >= 0) expected(map[k]) = 1;
      if (conv != expected) {
        mult = false;
        witness = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  out.push_back(check_bool("steinberg_iso_multiplicative", mult, witness));

  Vec image_of_identity = Vec::Zero(t.num_arrows());
  {
    const Vec one = identity_dense(s);
    for (int i = 0; i < s.dim(); ++i)
      if (one(i)) image_of_identity(map[i]) = 1;
  }
  out.push_back(check_bool("steinberg_iso_unital", image_of_identity == unit_space_indicator(t),
                           "identity does not map to the unit-space indicator"));
  return out;
}

std::vector<CheckResult> check_dynamics_correspondence(const PartialAction& a) {
  std::vector<CheckResult> out;
  const TransGroupoid t = transformation_groupoid(a);

  out.push_back(check_bool("minimal_iff_groupoid_minimal",
                           is_minimal(a) == is_minimal_groupoid(t), "sides differ"));
  out.push_back(check_bool(
      "transitive_iff_groupoid_transitive",
      is_topologically_transitive(a) == is_topologically_transitive_groupoid(t), "sides differ"));

  // Unit-space transport of invariant subsets: point x corresponds to the
  // object of its unit arrow, which is the point index itself.
  const auto inv_x = invariant_subsets(a);
  const auto inv_u = invariant_unit_subsets(t);
  out.push_back(check_bool("invariant_subset_transport", inv_x == inv_u,
                           "invariant subsets do not correspond under the unit bijection"));

  bool per_subset = true;
  std::string witness;
  for (Mask f : inv_x) {
    if (is_topologically_free_on(a, f) != is_effective_on(t, f)) {
      per_subset = false;
      witness = "subset mask " + std::to_string(f);
      break;
    }
  }
  out.push_back(check_bool("free_on_subset_iff_restriction_effective", per_subset, witness));

  out.push_back(check_bool("free_iff_effective", is_topologically_free(a) == is_effective(t),
                           "sides differ"));
  out.push_back(check_bool("residually_free_iff_strongly_effective",
                           is_residually_topologically_free(a) == is_strongly_effective(t),
                           "sides differ"));
  return out;
}

} // namespace sga
