#include "sga/groupoid.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <set>

namespace sga {

namespace {

int index_of(const std::vector<std::string>& ids, const std::string& id, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end())
    throw ValidationError(std::string("unknown ") + what + " '" + id + "'");
  return static_cast<int>(it - ids.begin());
}

} // namespace

int Groupoid::object_index(const std::string& id) const {
  return index_of(object_ids, id, "object");
}

int Groupoid::morphism_index(const std::string& id) const {
  return index_of(morphism_ids, id, "morphism");
}

Groupoid validate(const RawGroupoid& raw) {
  Groupoid g;
  g.object_ids = raw.objects;
  std::sort(g.object_ids.begin(), g.object_ids.end());
  if (std::adjacent_find(g.object_ids.begin(), g.object_ids.end()) != g.object_ids.end())
    throw ValidationError("duplicate object identifier");

  for (const auto& m : raw.morphisms) g.morphism_ids.push_back(m.id);
  std::sort(g.morphism_ids.begin(), g.morphism_ids.end());
  if (std::adjacent_find(g.morphism_ids.begin(), g.morphism_ids.end()) != g.morphism_ids.end())
    throw ValidationError("duplicate morphism identifier");

  const int n = g.num_morphisms();
  if (n > kMaxMorphisms)
    throw ValidationError("groupoid has " + std::to_string(n) + " morphisms; cap is " +
                          std::to_string(kMaxMorphisms));

  g.src.assign(n, -1);
  g.dst.assign(n, -1);
  for (const auto& m : raw.morphisms) {
    const int i = g.morphism_index(m.id);
    g.src[i] = g.object_index(m.src);
    g.dst[i] = g.object_index(m.dst);
  }

  g.unit.assign(g.num_objects(), -1);
  for (const auto& [obj, mor] : raw.identity) {
    const int e = g.object_index(obj);
    g.unit[e] = g.morphism_index(mor);
  }
  for (int e = 0; e < g.num_objects(); ++e) {
    if (g.unit[e] < 0)
      throw ValidationError("object '" + g.object_ids[e] + "' has no identity morphism");
    const int m = g.unit[e];
    if (g.src[m] != e || g.dst[m] != e)
      throw ValidationError("identity morphism '" + g.morphism_ids[m] + "' of object '" +
                            g.object_ids[e] + "' does not have that object as source and range");
  }

  g.inv.assign(n, -1);
  for (const auto& [mor, imor] : raw.inverse)
    g.inv[g.morphism_index(mor)] = g.morphism_index(imor);
  for (int i = 0; i < n; ++i) {
    if (g.inv[i] < 0)
      throw ValidationError("morphism '" + g.morphism_ids[i] + "' has no inverse assigned");
    if (g.src[g.inv[i]] != g.dst[i] || g.dst[g.inv[i]] != g.src[i])
      throw ValidationError("inverse of '" + g.morphism_ids[i] +
                            "' does not swap source and range");
  }

  g.comp = Eigen::MatrixXi::Constant(n, n, -1);
  for (const auto& t : raw.compose) {
    const int a = g.morphism_index(t[0]);
    const int b = g.morphism_index(t[1]);
    const int c = g.morphism_index(t[2]);
    if (g.src[a] != g.dst[b])
      throw ValidationError("non-composable product: compose('" + t[0] + "','" + t[1] +
                            "') is defined but source of '" + t[0] + "' differs from range of '" +
                            t[1] + "'");
    if (g.comp(a, b) != -1)
      throw ValidationError("duplicate composition entry for ('" + t[0] + "','" + t[1] + "')");
    g.comp(a, b) = c;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.src[a] == g.dst[b] && g.comp(a, b) < 0)
        throw ValidationError("missing composition for composable pair ('" + g.morphism_ids[a] +
                              "','" + g.morphism_ids[b] + "')");

  check_axioms(g);
  return g;
}

void check_axioms(const Groupoid& g) {
  const int n = g.num_morphisms();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.src[a] != g.dst[b]) continue;
      const int c = g.comp(a, b);
      if (c < 0)
        throw ValidationError("missing composition for composable pair ('" + g.morphism_ids[a] +
                              "','" + g.morphism_ids[b] + "')");
      if (g.src[c] != g.src[b] || g.dst[c] != g.dst[a])
        throw ValidationError("composite '" + g.morphism_ids[c] + "' of ('" + g.morphism_ids[a] +
                              "','" + g.morphism_ids[b] + "') has wrong source or range");
    }

  for (int e = 0; e < g.num_objects(); ++e) {
    const int u = g.unit[e];
    for (int a = 0; a < n; ++a) {
      if (g.src[a] == e && g.comp(a, u) != a)
        throw ValidationError("identity of object '" + g.object_ids[e] +
                              "' is not right-neutral on '" + g.morphism_ids[a] + "'");
      if (g.dst[a] == e && g.comp(u, a) != a)
        throw ValidationError("identity of object '" + g.object_ids[e] +
                              "' is not left-neutral on '" + g.morphism_ids[a] + "'");
    }
  }

  for (int a = 0; a < n; ++a) {
    if (g.comp(a, g.inv[a]) != g.unit[g.dst[a]])
      throw ValidationError("'" + g.morphism_ids[a] +
                            "' composed with its inverse is not the identity of its range");
    if (g.comp(g.inv[a], a) != g.unit[g.src[a]])
      throw ValidationError("inverse of '" + g.morphism_ids[a] +
                            "' composed with it is not the identity of its source");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.src[a] != g.dst[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (g.src[b] != g.dst[c]) continue;
        if (g.comp(g.comp(a, b), c) != g.comp(a, g.comp(b, c)))
          throw ValidationError("associativity fails on ('" + g.morphism_ids[a] + "','" +
                                g.morphism_ids[b] + "','" + g.morphism_ids[c] + "')");
      }
    }

  // Identity morphisms must be exactly { g∘g⁻¹ : g }.
  std::set<int> units(g.unit.begin(), g.unit.end());
  std::set<int> ranges;
  for (int a = 0; a < n; ++a) ranges.insert(g.comp(a, g.inv[a]));
  if (units != ranges)
    throw ValidationError("identity morphisms differ from the set of products g∘g⁻¹");
}

std::vector<int> isotropy_group(const Groupoid& g, int object) {
  if (object < 0 || object >= g.num_objects())
    throw ValidationError("unknown object index " + std::to_string(object));
  std::vector<int> out;
  for (int m = 0; m < g.num_morphisms(); ++m)
    if (g.src[m] == object && g.dst[m] == object) out.push_back(m);
  return out;
}

std::vector<std::string> isotropy_group(const Groupoid& g, const std::string& object_id) {
  std::vector<std::string> out;
  for (int m : isotropy_group(g, g.object_index(object_id))) out.push_back(g.morphism_ids[m]);
  return out;
}

Groupoid from_group(const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw ValidationError("group must be nonempty");
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("Cayley table size does not match element count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("Cayley table entry out of range");
  }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int x = 0; x < n && neutral; ++x) neutral = table[e][x] == x && table[x][e] == x;
    if (neutral) { id = e; break; }
  }
  if (id < 0) throw ValidationError("table is not a group: no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("table is not a group: not associative");
  std::vector<int> invm(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == id && table[b][a] == id) { invm[a] = b; break; }
    if (invm[a] < 0) throw ValidationError("table is not a group: missing inverse");
  }

  RawGroupoid raw;
  raw.objects = {elements[id]};
  for (int a = 0; a < n; ++a) raw.morphisms.push_back({elements[a], elements[id], elements[id]});
  raw.identity[elements[id]] = elements[id];
  for (int a = 0; a < n; ++a) raw.inverse[elements[a]] = elements[invm[a]];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      raw.compose.push_back({elements[a], elements[b], elements[table[a][b]]});
  return validate(raw);
}

Groupoid pair_groupoid(int n) {
  if (n < 1) throw ValidationError("pair groupoid needs at least one object");
  if (n * n > kMaxMorphisms) throw ValidationError("pair groupoid too large");
  RawGroupoid raw;
  auto obj = [](int i) { return "o" + std::to_string(i); };
  auto mor = [](int i, int j) { return "p" + std::to_string(i) + std::to_string(j); };
  for (int i = 0; i < n; ++i) raw.objects.push_back(obj(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw.morphisms.push_back({mor(i, j), obj(j), obj(i)});
  for (int i = 0; i < n; ++i) raw.identity[obj(i)] = mor(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw.inverse[mor(i, j)] = mor(j, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) raw.compose.push_back({mor(i, j), mor(j, k), mor(i, k)});
  return validate(raw);
}

std::vector<std::pair<int, int>> composable_pairs(const Groupoid& g) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.num_morphisms(); ++a)
    for (int b = 0; b < g.num_morphisms(); ++b)
      if (g.composable(a, b)) out.emplace_back(a, b);
  return out;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b, const std::string& prefix_a,
                        const std::string& prefix_b) {
  RawGroupoid raw;
  auto add = [&raw](const Groupoid& g, const std::string& prefix) {
    for (const auto& o : g.object_ids) raw.objects.push_back(prefix + o);
    for (int m = 0; m < g.num_morphisms(); ++m)
      raw.morphisms.push_back({prefix + g.morphism_ids[m], prefix + g.object_ids[g.src[m]],
                               prefix + g.object_ids[g.dst[m]]});
    for (int e = 0; e < g.num_objects(); ++e)
      raw.identity[prefix + g.object_ids[e]] = prefix + g.morphism_ids[g.unit[e]];
    for (int m = 0; m < g.num_morphisms(); ++m)
      raw.inverse[prefix + g.morphism_ids[m]] = prefix + g.morphism_ids[g.inv[m]];
    for (int x = 0; x < g.num_morphisms(); ++x)
      for (int y = 0; y < g.num_morphisms(); ++y)
        if (g.composable(x, y))
          raw.compose.push_back({prefix + g.morphism_ids[x], prefix + g.morphism_ids[y],
                                 prefix + g.morphism_ids[g.comp(x, y)]});
  };
  add(a, prefix_a);
  add(b, prefix_b);
  return validate(raw);
}

RawGroupoid to_raw(const Groupoid& g) {
  RawGroupoid raw;
  raw.objects = g.object_ids;
  for (int m = 0; m < g.num_morphisms(); ++m)
    raw.morphisms.push_back({g.morphism_ids[m], g.object_ids[g.src[m]], g.object_ids[g.dst[m]]});
  for (int e = 0; e < g.num_objects(); ++e)
    raw.identity[g.object_ids[e]] = g.morphism_ids[g.unit[e]];
  for (int m = 0; m < g.num_morphisms(); ++m)
    raw.inverse[g.morphism_ids[m]] = g.morphism_ids[g.inv[m]];
  for (int a = 0; a < g.num_morphisms(); ++a)
    for (int b = 0; b < g.num_morphisms(); ++b)
      if (g.composable(a, b))
        raw.compose.push_back(
            {g.morphism_ids[a], g.morphism_ids[b], g.morphism_ids[g.comp(a, b)]});
  return raw;
}

} // namespace sga
