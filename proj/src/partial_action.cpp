#include "sga/partial_action.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace sga {

Mask PartialAction::block(int object) const {
  Mask m = 0;
  for (int x = 0; x < num_points(); ++x)
    if (unit_of[x] == object) m = with_bit(m, x);
  return m;
}

int PartialAction::point_index(const std::string& id) const {
  auto it = std::find(point_ids.begin(), point_ids.end(), id);
  if (it == point_ids.end()) throw ValidationError("unknown point '" + id + "'");
  return static_cast<int>(it - point_ids.begin());
}

Mask PartialAction::image(int morphism, Mask s) const {
  Mask out = 0;
  for (int x : bits_of(s & dom[g.inv[morphism]])) out = with_bit(out, theta[morphism][x]);
  return out;
}

PartialAction validate(const RawPartialAction& raw) {
  PartialAction a;
  a.g = validate(raw.groupoid);

  for (const auto& pt : raw.points) a.point_ids.push_back(pt.id);
  std::sort(a.point_ids.begin(), a.point_ids.end());
  if (std::adjacent_find(a.point_ids.begin(), a.point_ids.end()) != a.point_ids.end())
    throw ValidationError("duplicate point identifier");
  const int nx = a.num_points();
  if (nx > kMaxPoints)
    throw ValidationError("point set has " + std::to_string(nx) + " points; cap is " +
                          std::to_string(kMaxPoints));

  a.unit_of.assign(nx, -1);
  for (const auto& pt : raw.points)
    a.unit_of[a.point_index(pt.id)] = a.g.object_index(pt.unit);

  const int n = a.g.num_morphisms();
  a.dom.assign(n, 0);
  std::set<std::string> seen;
  for (const auto& [gid, pts] : raw.domain) {
    const int m = a.g.morphism_index(gid);
    seen.insert(gid);
    for (const auto& pid : pts) a.dom[m] = with_bit(a.dom[m], a.point_index(pid));
  }
  for (int m = 0; m < n; ++m)
    if (!seen.count(a.g.morphism_ids[m]))
      throw ValidationError("no domain given for morphism '" + a.g.morphism_ids[m] + "'");

  a.theta.assign(n, std::vector<int>(std::max(nx, 1), -1));
  for (const auto& [gid, pairs] : raw.map) {
    const int m = a.g.morphism_index(gid);
    for (const auto& [from, to] : pairs)
      a.theta[m][a.point_index(from)] = a.point_index(to);
  }

  check_axioms(a);
  return a;
}

void check_axioms(const PartialAction& a) {
  const Groupoid& g = a.g;
  const int n = g.num_morphisms();
  const int nx = a.num_points();

  auto pname = [&](int x) { return "'" + a.point_ids[x] + "'"; };
  auto mname = [&](int m) { return "'" + g.morphism_ids[m] + "'"; };

  // Unit blocks partition the point set; the domain of each unit is its block.
  for (int x = 0; x < nx; ++x)
    if (a.unit_of[x] < 0 || a.unit_of[x] >= g.num_objects())
      throw ValidationError("point " + pname(x) + " has no valid unit label");
  for (int e = 0; e < g.num_objects(); ++e) {
    const int u = g.unit[e];
    if (a.dom[u] != a.block(e))
      throw ValidationError("domain of unit " + mname(u) +
                            " differs from the block of points labeled '" + g.object_ids[e] + "'");
  }

  // Domain containment: X_g inside X_{r(g)}.
  for (int m = 0; m < n; ++m)
    if (!subset(a.dom[m], a.dom[g.unit[g.dst[m]]]))
      throw ValidationError("domain of " + mname(m) +
                            " is not contained in the domain of its range unit");

  // theta_g is a bijection X_{g⁻¹} -> X_g with theta_{g⁻¹} as inverse.
  for (int m = 0; m < n; ++m) {
    const Mask src_dom = a.dom[g.inv[m]];
    Mask image = 0;
    for (int x = 0; x < nx; ++x) {
      const bool in_dom = bit(src_dom, x);
      const int y = a.theta[m][x];
      if (!in_dom && y != -1)
        throw ValidationError("theta of " + mname(m) + " is defined at " + pname(x) +
                              " which is outside the domain of " + mname(g.inv[m]));
      if (in_dom) {
        if (y < 0)
          throw ValidationError("theta of " + mname(m) + " is not a bijection: undefined at " +
                                pname(x));
        if (!bit(a.dom[m], y))
          throw ValidationError("theta of " + mname(m) + " sends " + pname(x) +
                                " outside its codomain");
        if (bit(image, y))
          throw ValidationError("theta of " + mname(m) + " is not a bijection: " + pname(y) +
                                " is hit twice");
        image = with_bit(image, y);
      }
    }
    if (image != a.dom[m])
      throw ValidationError("theta of " + mname(m) + " is not a bijection onto its codomain");
  }
  for (int m = 0; m < n; ++m)
    for (int x : bits_of(a.dom[g.inv[m]]))
      if (a.theta[g.inv[m]][a.theta[m][x]] != x)
        throw ValidationError("theta of " + mname(g.inv[m]) + " is not inverse to theta of " +
                              mname(m) + " at " + pname(x));

  // Units act as the identity.
  for (int e = 0; e < g.num_objects(); ++e) {
    const int u = g.unit[e];
    for (int x : bits_of(a.dom[u]))
      if (a.theta[u][x] != x)
        throw ValidationError("unit " + mname(u) + " does not act as the identity at " + pname(x));
  }

  // Composition domain and compatibility.
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h) {
      if (!g.composable(gg, h)) continue;
      const int gh = g.comp(gg, h);
      const Mask inter = a.dom[g.inv[gg]] & a.dom[h];
      for (int x : bits_of(inter)) {
        const int y = a.theta[g.inv[h]][x];
        if (!bit(a.dom[g.inv[gh]], y))
          throw ValidationError("composition domain axiom fails for (" + mname(gg) + "," +
                                mname(h) + ") at point " + pname(x));
        if (a.theta[gg][a.theta[h][y]] != a.theta[gh][y])
          throw ValidationError("compatibility axiom fails for (" + mname(gg) + "," + mname(h) +
                                ") at point " + pname(y));
      }
    }
}

bool is_global(const PartialAction& a) {
  for (int m = 0; m < a.g.num_morphisms(); ++m)
    if (a.dom[m] != a.dom[a.g.unit[a.g.dst[m]]]) return false;
  return true;
}

FibredAction to_fibred(const PartialAction& a) {
  if (!is_global(a)) throw ValidationError("action is not global; it has no fibred form");
  FibredAction f;
  f.g = a.g;
  f.point_ids = a.point_ids;
  f.anchor = a.unit_of;
  f.act = a.theta;
  return f;
}

PartialAction from_fibred(const FibredAction& f) {
  const int n = f.g.num_morphisms();
  const int nx = static_cast<int>(f.point_ids.size());

  // Fibred axioms: anchors act as identities, composability is preserved,
  // and the action is multiplicative on the pullback.
  for (int x = 0; x < nx; ++x) {
    const int u = f.g.unit[f.anchor[x]];
    if (f.act[u][x] != x)
      throw ValidationError("anchor unit does not fix point '" + f.point_ids[x] + "'");
  }
  for (int m = 0; m < n; ++m)
    for (int x = 0; x < nx; ++x) {
      const bool defined = f.act[m][x] != -1;
      if (defined != (f.g.src[m] == f.anchor[x]))
        throw ValidationError("fibred action of '" + f.g.morphism_ids[m] +
                              "' defined off the pullback at '" + f.point_ids[x] + "'");
      if (defined && f.anchor[f.act[m][x]] != f.g.dst[m])
        throw ValidationError("fibred action of '" + f.g.morphism_ids[m] +
                              "' does not move the anchor to its range");
    }
  for (int gg = 0; gg < n; ++gg)
    for (int h = 0; h < n; ++h) {
      if (!f.g.composable(gg, h)) continue;
      for (int x = 0; x < nx; ++x) {
        if (f.anchor[x] != f.g.src[h]) continue;
        if (f.act[gg][f.act[h][x]] != f.act[f.g.comp(gg, h)][x])
          throw ValidationError("fibred action is not multiplicative on ('" +
                                f.g.morphism_ids[gg] + "','" + f.g.morphism_ids[h] + "')");
      }
    }

  PartialAction a;
  a.g = f.g;
  a.point_ids = f.point_ids;
  a.unit_of = f.anchor;
  a.dom.assign(n, 0);
  for (int m = 0; m < n; ++m)
    for (int x = 0; x < nx; ++x)
      if (f.anchor[x] == f.g.dst[m]) a.dom[m] = with_bit(a.dom[m], x);
  a.theta = f.act;
  check_axioms(a);
  return a;
}

Mask orbit(const PartialAction& a, int point) {
  if (point < 0 || point >= a.num_points())
    throw ValidationError("unknown point index " + std::to_string(point));
  Mask reached = with_bit(0, point);
  std::vector<int> stack{point};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int m = 0; m < a.g.num_morphisms(); ++m) {
      if (!bit(a.dom[a.g.inv[m]], x)) continue;
      const int y = a.theta[m][x];
      if (!bit(reached, y)) {
        reached = with_bit(reached, y);
        stack.push_back(y);
      }
    }
  }
  return reached;
}

namespace {

std::vector<Mask> orbit_partition(const PartialAction& a) {
  std::vector<Mask> orbits;
  Mask seen = 0;
  for (int x = 0; x < a.num_points(); ++x) {
    if (bit(seen, x)) continue;
    Mask o = orbit(a, x);
    seen |= o;
    orbits.push_back(o);
  }
  return orbits;
}

} // namespace

std::vector<Mask> invariant_subsets(const PartialAction& a) {
  const std::vector<Mask> orbits = orbit_partition(a);
  const int k = static_cast<int>(orbits.size());
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << k);
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

bool is_invariant(const PartialAction& a, Mask m) {
  for (int g = 0; g < a.g.num_morphisms(); ++g)
    if (!subset(a.image(g, m), m)) return false;
  return true;
}

bool is_minimal(const PartialAction& a) { return invariant_subsets(a).size() <= 2; }

bool is_topologically_transitive(const PartialAction& a) {
  const int nx = a.num_points();
  for (int x = 0; x < nx; ++x) {
    const Mask o = orbit(a, x);
    if (o != a.all_points()) return false;
  }
  return true;
}

Mask fixed_points(const PartialAction& a, int t) {
  Mask out = 0;
  for (int x : bits_of(a.dom[a.g.inv[t]]))
    if (a.theta[t][x] == x) out = with_bit(out, x);
  return out;
}

bool is_topologically_free_on(const PartialAction& a, Mask f) {
  if (!subset(f, a.all_points())) throw ValidationError("subset lies outside the point set");
  for (int e = 0; e < a.g.num_objects(); ++e)
    for (int t : isotropy_group(a.g, e)) {
      if (a.g.is_unit(t)) continue;
      if ((fixed_points(a, t) & f) != 0) return false;
    }
  return true;
}

bool is_topologically_free(const PartialAction& a) {
  return is_topologically_free_on(a, a.all_points());
}

bool is_residually_topologically_free(const PartialAction& a) {
  for (Mask f : invariant_subsets(a))
    if (!is_topologically_free_on(a, f)) return false;
  return true;
}

PartialAction restrict_to(const PartialAction& a, Mask m) {
  if (!is_invariant(a, m)) throw ValidationError("restriction subset is not invariant");
  PartialAction r;
  r.g = a.g;
  std::vector<int> new_index(a.num_points(), -1);
  for (int x : bits_of(m)) {
    new_index[x] = static_cast<int>(r.point_ids.size());
    r.point_ids.push_back(a.point_ids[x]);
    r.unit_of.push_back(a.unit_of[x]);
  }
  const int n = a.g.num_morphisms();
  const int rx = r.num_points();
  r.dom.assign(n, 0);
  r.theta.assign(n, std::vector<int>(std::max(rx, 1), -1));
  for (int g = 0; g < n; ++g) {
    for (int x : bits_of(a.dom[g] & m)) r.dom[g] = with_bit(r.dom[g], new_index[x]);
    for (int x : bits_of(a.dom[a.g.inv[g]] & m))
      r.theta[g][new_index[x]] = new_index[a.theta[g][x]];
  }
  check_axioms(r);
  return r;
}

RawPartialAction to_raw(const PartialAction& a) {
  RawPartialAction raw;
  raw.groupoid = to_raw(a.g);
  for (int x = 0; x < a.num_points(); ++x)
    raw.points.push_back({a.point_ids[x], a.g.object_ids[a.unit_of[x]]});
  for (int m = 0; m < a.g.num_morphisms(); ++m) {
    auto& d = raw.domain[a.g.morphism_ids[m]];
    for (int x : bits_of(a.dom[m])) d.push_back(a.point_ids[x]);
    auto& mp = raw.map[a.g.morphism_ids[m]];
    for (int x : bits_of(a.dom[a.g.inv[m]])) mp[a.point_ids[x]] = a.point_ids[a.theta[m][x]];
  }
  return raw;
}

std::string fingerprint(const PartialAction& a) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& id : a.g.morphism_ids) eat(id);
  for (const auto& id : a.point_ids) eat(id);
  for (int v : a.g.src) eat(std::to_string(v));
  for (int v : a.g.dst) eat(std::to_string(v));
  for (int v : a.g.inv) eat(std::to_string(v));
  for (int x = 0; x < a.g.comp.rows(); ++x)
    for (int y = 0; y < a.g.comp.cols(); ++y) eat(std::to_string(a.g.comp(x, y)));
  for (int v : a.unit_of) eat(std::to_string(v));
  for (Mask m : a.dom) eat(std::to_string(m));
  for (const auto& row : a.theta)
    for (int v : row) eat(std::to_string(v));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Random instances.
//
// Strategy: assemble a groupoid from classified components (cyclic groups,
// the Klein four-group, the symmetric group S3, pair groupoids), build a
// global fibred set out of translation fibers and coset spaces, then restrict
// to a random subset of points.  Restriction of a partial action to an
// arbitrary subset is again a partial action, so instances validate by
// construction; validation still runs as a final assert.

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

std::vector<std::vector<int>> cyclic_table(int k) {
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = (i + j) % k;
  return t;
}

std::vector<std::vector<int>> klein_table() {
  // Z2 x Z2 with elements encoded as two bits.
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return t;
}

std::vector<std::vector<int>> s3_table() {
  // Permutations of {0,1,2} listed in a fixed order.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&perms](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = find(c);
    }
  return t;
}

struct GroupPart {
  std::vector<std::vector<int>> table;
  std::string tag;
};

GroupPart random_group(std::mt19937_64& rng, int max_order) {
  std::vector<GroupPart> pool;
  for (int k = 1; k <= std::max(1, std::min(max_order, 6)); ++k)
    pool.push_back({cyclic_table(k), "c" + std::to_string(k)});
  if (max_order >= 4) pool.push_back({klein_table(), "v4"});
  if (max_order >= 6) pool.push_back({s3_table(), "s3"});
  return pool[pick(rng, pool.size())];
}

// Subgroups of a small group, by brute-force closure.
std::vector<std::vector<int>> subgroups(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::set<std::vector<int>> found;
  for (Mask seedset = 1; seedset < (Mask{1} << n); ++seedset) {
    if (!bit(seedset, 0)) continue;  // identity assumed at index 0
    std::vector<int> members = bits_of(seedset);
    // close under products
    std::set<int> cl(members.begin(), members.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(cl.begin(), cl.end());
      for (int x : cur)
        for (int y : cur)
          if (cl.insert(table[x][y]).second) grew = true;
    }
    found.insert(std::vector<int>(cl.begin(), cl.end()));
  }
  return {found.begin(), found.end()};
}

} // namespace

PartialAction random_instance(std::uint64_t seed, const ActionBounds& bounds) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  for (int attempt = 0; attempt < bounds.retries; ++attempt) {
    // Groupoid: either one group component, a pair groupoid, or a disjoint
    // union of two smaller pieces.
    Groupoid g;
    const int style = static_cast<int>(pick(rng, 4));
    try {
      if (style == 0 || bounds.max_morphisms < 4) {
        auto part = random_group(rng, bounds.max_morphisms);
        std::vector<std::string> els;
        for (std::size_t i = 0; i < part.table.size(); ++i)
          els.push_back(part.tag + "_" + std::to_string(i));
        g = from_group(els, part.table);
      } else if (style == 1) {
        g = pair_groupoid(2);
      } else if (style == 2) {
        auto p1 = random_group(rng, bounds.max_morphisms / 2);
        auto p2 = random_group(rng, bounds.max_morphisms -
                                        static_cast<int>(p1.table.size()));
        std::vector<std::string> e1, e2;
        for (std::size_t i = 0; i < p1.table.size(); ++i)
          e1.push_back(p1.tag + "_" + std::to_string(i));
        for (std::size_t i = 0; i < p2.table.size(); ++i)
          e2.push_back(p2.tag + "_" + std::to_string(i));
        g = disjoint_union(from_group(e1, p1.table), from_group(e2, p2.table), "l:", "r:");
      } else {
        auto p1 = random_group(rng, bounds.max_morphisms - 4);
        std::vector<std::string> e1;
        for (std::size_t i = 0; i < p1.table.size(); ++i)
          e1.push_back(p1.tag + "_" + std::to_string(i));
        g = disjoint_union(from_group(e1, p1.table), pair_groupoid(2), "l:", "r:");
      }
    } catch (const ValidationError&) {
      continue;
    }
    if (g.num_morphisms() > bounds.max_morphisms) continue;

    // Global fibred set: for each object, translation fibers and coset fibers.
    // anchor(y) = object; beta_g acts between the fibers over s(g) and r(g).
    struct YPoint { int object; int kind; int datum; int copy; };
    std::vector<YPoint> ypts;
    // Translation points: one per (copy, morphism with range = object).
    const int copies = 1 + static_cast<int>(pick(rng, 2));
    for (int c = 0; c < copies; ++c)
      for (int m = 0; m < g.num_morphisms(); ++m)
        ypts.push_back({g.dst[m], 0, m, c});
    // Coset points for one-object components: orbits of the isotropy group on
    // cosets by a random subgroup.
    std::vector<std::vector<int>> coset_rep;  // per object: morphism -> coset id offset
    // Only for objects whose isotropy equals every morphism at the object
    // (i.e. group components).
    std::vector<int> coset_base(g.num_objects(), -1);
    std::vector<std::vector<int>> coset_of(g.num_objects());
    for (int e = 0; e < g.num_objects(); ++e) {
      auto iso = isotropy_group(g, e);
      bool group_component = true;
      for (int m = 0; m < g.num_morphisms(); ++m)
        if ((g.src[m] == e || g.dst[m] == e) && (g.src[m] != e || g.dst[m] != e))
          group_component = false;
      if (!group_component || pick(rng, 2) == 0) continue;
      // local table over iso indices
      std::vector<int> local(g.num_morphisms(), -1);
      for (std::size_t i = 0; i < iso.size(); ++i) local[iso[i]] = static_cast<int>(i);
      std::vector<std::vector<int>> table(iso.size(), std::vector<int>(iso.size()));
      for (std::size_t i = 0; i < iso.size(); ++i)
        for (std::size_t j = 0; j < iso.size(); ++j)
          table[i][j] = local[g.comp(iso[i], iso[j])];
      // identity must sit at index 0 for subgroups(): rotate so unit first
      int unit_local = local[g.unit[e]];
      if (unit_local != 0) {
        // remap indices: swap 0 and unit_local consistently
        std::vector<int> perm(iso.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[unit_local]);
        std::vector<std::vector<int>> t2(iso.size(), std::vector<int>(iso.size()));
        std::vector<int> inv_perm(iso.size());
        for (std::size_t i = 0; i < iso.size(); ++i) inv_perm[perm[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < iso.size(); ++i)
          for (std::size_t j = 0; j < iso.size(); ++j)
            t2[i][j] = inv_perm[table[perm[i]][perm[j]]];
        table = t2;
        std::vector<int> iso2(iso.size());
        for (std::size_t i = 0; i < iso.size(); ++i) iso2[i] = iso[perm[i]];
        iso = iso2;
        for (std::size_t i = 0; i < iso.size(); ++i) local[iso[i]] = static_cast<int>(i);
      }
      auto subs = subgroups(table);
      const auto& h = subs[pick(rng, subs.size())];
      // cosets xH
      std::vector<int> coset(iso.size(), -1);
      int ncos = 0;
      for (std::size_t x = 0; x < iso.size(); ++x) {
        if (coset[x] != -1) continue;
        for (int hh : h) coset[table[x][hh]] = ncos;
        ++ncos;
      }
      coset_base[e] = static_cast<int>(ypts.size());
      coset_of[e].assign(g.num_morphisms(), -1);
      for (std::size_t i = 0; i < iso.size(); ++i) coset_of[e][iso[i]] = coset[i];
      for (int c = 0; c < ncos; ++c) ypts.push_back({e, 1, c, 0});
    }

    const int ny = static_cast<int>(ypts.size());
    if (ny == 0) continue;

    // Pick the restriction subset (empty only when no points are allowed).
    const int want =
        bounds.max_points == 0
            ? 0
            : 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(bounds.max_points)));
    std::vector<int> chosen;
    for (int i = 0; i < ny; ++i) chosen.push_back(i);
    for (int i = ny - 1; i > 0; --i) std::swap(chosen[i], chosen[pick(rng, i + 1)]);
    chosen.resize(std::min(want, ny));
    std::sort(chosen.begin(), chosen.end());

    // Global action on Y.
    auto act_on = [&](int m, int yi) -> int {
      const YPoint& y = ypts[yi];
      if (g.src[m] != y.object) return -1;
      if (y.kind == 0) {
        const int target = g.comp(m, y.datum);
        for (int j = 0; j < ny; ++j)
          if (ypts[j].kind == 0 && ypts[j].copy == y.copy && ypts[j].datum == target) return j;
        return -1;
      }
      // coset point: m must be isotropy at y.object
      const int e = y.object;
      if (g.dst[m] != e) return -1;
      // find coset of m * (representative of y.datum): use any iso rep r with
      // coset_of[e][r] == y.datum
      for (int r = 0; r < g.num_morphisms(); ++r) {
        if (coset_of[e].empty() || coset_of[e][r] != y.datum) continue;
        const int c = coset_of[e][g.comp(m, r)];
        return coset_base[e] + c;
      }
      return -1;
    };

    PartialAction a;
    a.g = g;
    std::vector<int> back(ny, -1);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      ids.push_back("x" + std::to_string(i));
    a.point_ids = ids;
    for (std::size_t i = 0; i < chosen.size(); ++i) back[chosen[i]] = static_cast<int>(i);
    for (int yi : chosen) a.unit_of.push_back(ypts[yi].object);

    const int n = g.num_morphisms();
    const int nx = a.num_points();
    a.dom.assign(n, 0);
    a.theta.assign(n, std::vector<int>(std::max(nx, 1), -1));
    for (int m = 0; m < n; ++m) {
      // X_m = X ∩ beta_m(X ∩ Y_{s(m)})
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        const int yi = chosen[i];
        const int im = act_on(m, yi);
        if (im >= 0 && back[im] >= 0) {
          a.dom[m] = with_bit(a.dom[m], back[im]);
          a.theta[m][static_cast<int>(i)] = back[im];
        }
      }
    }
    // The map above stores theta_m on X ∩ X_{m⁻¹} directly; domains of units
    // need their full blocks even for unreached points.
    for (int e = 0; e < g.num_objects(); ++e) {
      const int u = g.unit[e];
      a.dom[u] = a.block(e);
      for (int x : bits_of(a.dom[u])) a.theta[u][x] = x;
    }

    if (bounds.max_skew_dim > 0) {
      int dim = 0;
      for (int m = 0; m < n; ++m) dim += popcount(a.dom[m]);
      if (dim > bounds.max_skew_dim) continue;
    }

    try {
      check_axioms(a);
    } catch (const ValidationError&) {
      continue;
    }
    return a;
  }
  throw ValidationError("could not generate a valid action within the retry budget");
}

} // namespace sga
