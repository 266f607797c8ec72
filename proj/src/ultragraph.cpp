#include "sga/ultragraph.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

namespace sga {

int Ultragraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
  if (it == vertex_ids.end()) throw ValidationError("unknown vertex '" + id + "'");
  return static_cast<int>(it - vertex_ids.begin());
}

int Ultragraph::edge_index(const std::string& id) const {
  auto it = std::find(edge_ids.begin(), edge_ids.end(), id);
  if (it == edge_ids.end()) throw ValidationError("unknown edge '" + id + "'");
  return static_cast<int>(it - edge_ids.begin());
}

bool Ultragraph::is_sink(int v) const {
  for (int e = 0; e < num_edges(); ++e)
    if (esrc[e] == v) return false;
  return true;
}

Ultragraph validate(const RawUltragraph& raw) {
  Ultragraph u;
  u.vertex_ids = raw.vertices;
  std::sort(u.vertex_ids.begin(), u.vertex_ids.end());
  if (std::adjacent_find(u.vertex_ids.begin(), u.vertex_ids.end()) != u.vertex_ids.end())
    throw ValidationError("duplicate vertex identifier");
  if (u.num_vertices() > 60) throw ValidationError("too many vertices");

  for (const auto& e : raw.edges) u.edge_ids.push_back(e.id);
  std::sort(u.edge_ids.begin(), u.edge_ids.end());
  if (std::adjacent_find(u.edge_ids.begin(), u.edge_ids.end()) != u.edge_ids.end())
    throw ValidationError("duplicate edge identifier");

  u.esrc.assign(u.num_edges(), -1);
  u.erange.assign(u.num_edges(), 0);
  for (const auto& e : raw.edges) {
    const int i = u.edge_index(e.id);
    u.esrc[i] = u.vertex_index(e.source);
    for (const auto& v : e.range) u.erange[i] = with_bit(u.erange[i], u.vertex_index(v));
    if (u.erange[i] == 0)
      throw ValidationError("edge '" + e.id + "' has empty range");
  }
  return u;
}

RawUltragraph to_raw(const Ultragraph& u) {
  RawUltragraph raw;
  raw.vertices = u.vertex_ids;
  for (int e = 0; e < u.num_edges(); ++e) {
    RawUltragraph::Edge edge;
    edge.id = u.edge_ids[e];
    edge.source = u.vertex_ids[u.esrc[e]];
    for (int v : bits_of(u.erange[e])) edge.range.push_back(u.vertex_ids[v]);
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

bool is_path(const Ultragraph& u, const Path& p) {
  for (int e : p)
    if (e < 0 || e >= u.num_edges()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!bit(u.erange[p[i]], u.esrc[p[i + 1]])) return false;
  return true;
}

bool is_loop(const Ultragraph& u, const Path& p) {
  return !p.empty() && is_path(u, p) && bit(u.erange[p.back()], u.esrc[p.front()]);
}

namespace {

void sort_masks(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Mask> close_family(const Ultragraph& u, bool with_complements) {
  if (u.num_vertices() > 20)
    throw CapExceeded("vertex-set family closure capped at 20 vertices");
  std::set<Mask> fam;
  fam.insert(0);
  for (int v = 0; v < u.num_vertices(); ++v) fam.insert(with_bit(0, v));
  for (int e = 0; e < u.num_edges(); ++e) fam.insert(u.erange[e]);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(fam.begin(), fam.end());
    for (Mask a : cur)
      for (Mask b : cur) {
        if (fam.insert(a | b).second) grew = true;
        if (fam.insert(a & b).second) grew = true;
        if (with_complements && fam.insert(a & ~b).second) grew = true;
      }
  }
  std::vector<Mask> out(fam.begin(), fam.end());
  sort_masks(out);
  return out;
}

} // namespace

std::vector<Mask> generalized_vertices(const Ultragraph& u) { return close_family(u, false); }

std::vector<Mask> accommodating_family(const Ultragraph& u) { return close_family(u, true); }

Mask relative_range(const Ultragraph& u, Mask a, const Path& alpha) {
  if (!is_path(u, alpha)) throw ValidationError("invalid path");
  Mask cur = a;
  for (int e : alpha) cur = bit(cur, u.esrc[e]) ? u.erange[e] : 0;
  return cur;
}

const char* to_string(LoopCount c) {
  switch (c) {
    case LoopCount::none: return "0";
    case LoopCount::one: return "1";
    default: return "many";
  }
}

namespace {

// Walk graph for simple loops based at v: nodes are edges, arcs go to
// continuations whose source is not v; initial nodes start at v, accepting
// nodes return to v.
struct SimpleLoopGraph {
  std::vector<std::vector<int>> arcs;
  std::vector<char> initial, accepting;

  SimpleLoopGraph(const Ultragraph& u, int v)
      : arcs(u.num_edges()), initial(u.num_edges(), 0), accepting(u.num_edges(), 0) {
    for (int e = 0; e < u.num_edges(); ++e) {
      initial[e] = u.esrc[e] == v;
      accepting[e] = bit(u.erange[e], v);
      for (int f = 0; f < u.num_edges(); ++f)
        if (bit(u.erange[e], u.esrc[f]) && u.esrc[f] != v) arcs[e].push_back(f);
    }
  }
};

std::vector<char> reachable_from(const std::vector<std::vector<int>>& arcs,
                                 const std::vector<char>& start) {
  std::vector<char> seen = start;
  std::deque<int> queue;
  for (std::size_t i = 0; i < start.size(); ++i)
    if (start[i]) queue.push_back(static_cast<int>(i));
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    for (int f : arcs[e])
      if (!seen[f]) {
        seen[f] = 1;
        queue.push_back(f);
      }
  }
  return seen;
}

bool has_cycle(const std::vector<std::vector<int>>& arcs, const std::vector<char>& keep) {
  const int n = static_cast<int>(arcs.size());
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (!keep[root] || state[root]) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [e, it] = stack.back();
      bool advanced = false;
      while (it < arcs[e].size()) {
        const int f = arcs[e][it++];
        if (!keep[f]) continue;
        if (state[f] == 1) return true;
        if (state[f] == 0) {
          state[f] = 1;
          stack.emplace_back(f, 0);
          advanced = true;
          break;
        }
      }
      if (!advanced && it >= arcs[e].size()) {
        state[e] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

} // namespace

LoopCount simple_loop_count_at(const Ultragraph& u, int v) {
  if (v < 0 || v >= u.num_vertices())
    throw ValidationError("unknown vertex index " + std::to_string(v));
  const SimpleLoopGraph g(u, v);
  const int n = u.num_edges();

  const std::vector<char> reach = reachable_from(g.arcs, g.initial);
  std::vector<std::vector<int>> rev(n);
  for (int e = 0; e < n; ++e)
    for (int f : g.arcs[e]) rev[f].push_back(e);
  const std::vector<char> coreach = reachable_from(rev, g.accepting);

  std::vector<char> keep(n, 0);
  bool any = false;
  for (int e = 0; e < n; ++e) {
    keep[e] = reach[e] && coreach[e];
    any = any || keep[e];
  }
  if (!any) return LoopCount::none;
  if (has_cycle(g.arcs, keep)) return LoopCount::many;

  // Acyclic: count accepted walks with saturation at 2.
  // ways(e) = [accepting e] + sum of ways over kept arcs.
  std::vector<int> ways(n, -1);
  std::vector<int> order;
  {
    // topological order of the kept subgraph via DFS postorder
    std::vector<int> state(n, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
      if (!keep[root] || state[root]) continue;
      stack.emplace_back(root, 0);
      state[root] = 1;
      while (!stack.empty()) {
        auto& [e, it] = stack.back();
        bool advanced = false;
        while (it < g.arcs[e].size()) {
          const int f = g.arcs[e][it++];
          if (!keep[f] || state[f]) continue;
          state[f] = 1;
          stack.emplace_back(f, 0);
          advanced = true;
          break;
        }
        if (!advanced && it >= g.arcs[e].size()) {
          order.push_back(e);
          stack.pop_back();
        }
      }
    }
  }
  for (int e : order) {
    int w = g.accepting[e] ? 1 : 0;
    for (int f : g.arcs[e])
      if (keep[f]) w = std::min(2, w + ways[f]);
    ways[e] = w;
  }
  int total = 0;
  for (int e = 0; e < n; ++e)
    if (keep[e] && g.initial[e]) total = std::min(2, total + ways[e]);
  if (total == 0) return LoopCount::none;
  return total == 1 ? LoopCount::one : LoopCount::many;
}

std::optional<Path> unique_simple_loop_at(const Ultragraph& u, int v) {
  if (simple_loop_count_at(u, v) != LoopCount::one) return std::nullopt;
  const SimpleLoopGraph g(u, v);
  // With exactly one accepted walk, greedy reconstruction works: from the
  // unique productive initial edge, each step has exactly one productive
  // continuation or terminates at an accepting edge.
  const int n = u.num_edges();
  std::vector<char> reach = reachable_from(g.arcs, g.initial);
  std::vector<std::vector<int>> rev(n);
  for (int e = 0; e < n; ++e)
    for (int f : g.arcs[e]) rev[f].push_back(e);
  const std::vector<char> coreach = reachable_from(rev, g.accepting);

  int cur = -1;
  for (int e = 0; e < n; ++e)
    if (g.initial[e] && reach[e] && coreach[e]) { cur = e; break; }
  Path loop;
  while (cur >= 0) {
    loop.push_back(cur);
    int next = -1;
    for (int f : g.arcs[cur])
      if (coreach[f]) { next = f; break; }
    if (g.accepting[cur] && next == -1) break;
    cur = next;
    if (loop.size() > static_cast<std::size_t>(n) + 1) break;  // safety, unreachable
  }
  return loop;
}

ConditionKReport condition_k(const Ultragraph& u) {
  ConditionKReport rep;
  for (int v = 0; v < u.num_vertices(); ++v) {
    const LoopCount c = simple_loop_count_at(u, v);
    rep.per_vertex.push_back(c);
    if (c == LoopCount::one) rep.holds = false;
  }
  return rep;
}

std::vector<LoopExit> exits_of_loop(const Ultragraph& u, const Path& loop) {
  if (!is_loop(u, loop)) throw ValidationError("not a loop");
  std::vector<LoopExit> out;
  const int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    const Mask range = u.erange[loop[i]];
    const int next = loop[(i + 1) % n];
    for (int e = 0; e < u.num_edges(); ++e)
      if (bit(range, u.esrc[e]) && e != next) out.push_back({i + 1, e, -1});
    for (int w : bits_of(range))
      if (u.is_sink(w)) out.push_back({i + 1, -1, w});
  }
  return out;
}

namespace {

int letter_of_power(const Path& gamma, long long k) {
  return gamma[static_cast<std::size_t>(k % static_cast<long long>(gamma.size()))];
}

int minimal_period(const Path& gamma) {
  const int n = static_cast<int>(gamma.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = gamma[i] == gamma[i - d];
    if (ok) return d;
  }
  return n;
}

} // namespace

bool is_recurrent(const Ultragraph& u, const Path& gamma, const Path& rho) {
  if (!is_loop(u, gamma) || !is_loop(u, rho)) throw ValidationError("not a loop");
  if (u.esrc[gamma.front()] != u.esrc[rho.front()])
    throw ValidationError("companion loop has a different source");
  const long long glen = static_cast<long long>(gamma.size());
  const long long rlen = static_cast<long long>(rho.size());
  const long long bound = glen + rlen + glen;
  for (long long k = 0; k < bound; ++k) {
    int lhs;  // letter k of gamma rho gamma^inf
    if (k < glen) lhs = gamma[static_cast<std::size_t>(k)];
    else if (k < glen + rlen) lhs = rho[static_cast<std::size_t>(k - glen)];
    else lhs = letter_of_power(gamma, k - glen - rlen);
    const int rhs = letter_of_power(gamma, k);
    if (lhs != rhs) return true;
  }
  return false;
}

std::optional<Path> recurrence_witness(const Ultragraph& u, const Path& gamma, int max_len) {
  if (!is_loop(u, gamma)) throw ValidationError("not a loop");
  if (max_len < 1) throw ValidationError("search bound must be positive");
  const int v = u.esrc[gamma.front()];
  const int p0 = minimal_period(gamma);

  auto word = [&](long long k) { return letter_of_power(gamma, k); };

  // Prefix loops whose length is not a multiple of the minimal period.
  for (int m = 1; m <= max_len; ++m) {
    if (m % p0 == 0) continue;
    if (!bit(u.erange[word(m - 1)], v)) continue;
    Path rho;
    for (int k = 0; k < m; ++k) rho.push_back(word(k));
    return rho;
  }

  // Deviating loops: follow the periodic word for k steps, take one edge off
  // the word, then close back to v by a shortest continuation.
  // close_dist[e] = least number of edges in a walk starting at e whose last
  // edge ranges over v.
  const int ne = u.num_edges();
  std::vector<int> close_dist(ne, -1);
  {
    std::deque<int> queue;
    for (int e = 0; e < ne; ++e)
      if (bit(u.erange[e], v)) {
        close_dist[e] = 1;
        queue.push_back(e);
      }
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int e = 0; e < ne; ++e) {
        if (close_dist[e] != -1 || !bit(u.erange[e], u.esrc[f])) continue;
        close_dist[e] = close_dist[f] + 1;
        queue.push_back(e);
      }
    }
  }
  auto closing_walk = [&](int start) {
    Path walk{start};
    int cur = start;
    while (!bit(u.erange[cur], v)) {
      for (int f = 0; f < ne; ++f)
        if (bit(u.erange[cur], u.esrc[f]) && close_dist[f] == close_dist[cur] - 1) {
          walk.push_back(f);
          cur = f;
          break;
        }
    }
    return walk;
  };

  for (int k = 0; k < max_len; ++k) {
    for (int e = 0; e < ne; ++e) {
      if (e == word(k)) continue;
      const bool fits = k == 0 ? u.esrc[e] == v : bit(u.erange[word(k - 1)], u.esrc[e]);
      if (!fits) continue;
      if (close_dist[e] < 0 || k + close_dist[e] > max_len) continue;
      Path rho;
      for (int i = 0; i < k; ++i) rho.push_back(word(i));
      const Path tail = closing_walk(e);
      rho.insert(rho.end(), tail.begin(), tail.end());
      return rho;
    }
  }
  return std::nullopt;
}

bool is_recurrent_any(const Ultragraph& u, const Path& gamma, int max_len) {
  return recurrence_witness(u, gamma, max_len).has_value();
}

int default_recurrence_bound(const Ultragraph& u, const Path& gamma) {
  return static_cast<int>(gamma.size()) * u.num_edges() + u.num_edges();
}

namespace {

// Shortest loops based at v within the length bound: returns the minimal
// length, whether it is achieved by at least two distinct loops, and one
// witness loop.
struct ShortestLoops {
  int length = -1;   // -1 when no loop within the bound
  int count = 0;     // saturated at 2
  Path loop;
};

ShortestLoops shortest_loops_at(const Ultragraph& u, int v, int max_len) {
  const int ne = u.num_edges();
  ShortestLoops out;
  // ways[t][e]: number of walks of t edges from a v-source edge ending at e,
  // saturated at 2.
  std::vector<std::vector<int>> ways(static_cast<std::size_t>(max_len) + 1,
                                     std::vector<int>(ne, 0));
  for (int e = 0; e < ne; ++e)
    if (u.esrc[e] == v) ways[1][e] = 1;
  for (int t = 1; t <= max_len; ++t) {
    int total = 0;
    for (int e = 0; e < ne; ++e)
      if (bit(u.erange[e], v)) total = std::min(2, total + ways[t][e]);
    if (total > 0) {
      out.length = t;
      out.count = total;
      // reconstruct one loop of length t, lexicographically first by edge
      // index at each step from the end
      Path rev;
      int cur = -1;
      for (int e = 0; e < ne && cur < 0; ++e)
        if (bit(u.erange[e], v) && ways[t][e] > 0) cur = e;
      rev.push_back(cur);
      for (int step = t - 1; step >= 1; --step) {
        for (int e = 0; e < ne; ++e)
          if (ways[step][e] > 0 && bit(u.erange[e], u.esrc[cur])) {
            cur = e;
            rev.push_back(cur);
            break;
          }
      }
      out.loop.assign(rev.rbegin(), rev.rend());
      return out;
    }
    if (t == max_len) break;
    for (int e = 0; e < ne; ++e) {
      if (ways[t][e] == 0) continue;
      for (int f = 0; f < ne; ++f)
        if (bit(u.erange[e], u.esrc[f]))
          ways[t + 1][f] = std::min(2, ways[t + 1][f] + ways[t][e]);
    }
  }
  return out;
}

} // namespace

KrReport check_kr(const Ultragraph& u, int max_len) {
  KrReport rep;
  const ConditionKReport k = condition_k(u);
  rep.condition_k = k.holds;

  for (int v = 0; v < u.num_vertices(); ++v) {
    KrVertexReport vr;
    vr.vertex = v;
    vr.simple_loops = k.per_vertex[static_cast<std::size_t>(v)];
    const ShortestLoops sl = shortest_loops_at(u, v, max_len);
    vr.has_loop_within_bound = sl.length > 0;
    if (sl.length > 0) {
      if (sl.count >= 2) {
        // Two distinct loops of equal length witness each other: at most one
        // of them can be a prefix power of any given periodic word.
        vr.all_bounded_loops_recurrent = true;
      } else {
        // All bounded loops share their witnesses with the unique shortest
        // loop, so the bounded quantifier reduces to this single search.
        vr.all_bounded_loops_recurrent = is_recurrent_any(u, sl.loop, max_len);
        if (!vr.all_bounded_loops_recurrent) vr.transitory_loop = sl.loop;
      }
      if (!vr.all_bounded_loops_recurrent) rep.bounded_recurrent = false;
    }
    rep.per_vertex.push_back(std::move(vr));
  }
  rep.consistent = rep.condition_k == rep.bounded_recurrent;
  return rep;
}

Ultragraph random_ultragraph(std::uint64_t seed, int num_vertices, int num_edges) {
  if (num_vertices < 1) throw ValidationError("need at least one vertex");
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 17);
  auto pick = [&rng](std::uint64_t n) { return n ? rng() % n : 0; };
  RawUltragraph raw;
  for (int v = 0; v < num_vertices; ++v) raw.vertices.push_back("v" + std::to_string(v));
  for (int e = 0; e < num_edges; ++e) {
    RawUltragraph::Edge edge;
    edge.id = "e" + std::to_string(e);
    edge.source = raw.vertices[pick(static_cast<std::uint64_t>(num_vertices))];
    const int size = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(
                             std::min(num_vertices, 3))));
    std::set<std::string> range;
    while (static_cast<int>(range.size()) < size)
      range.insert(raw.vertices[pick(static_cast<std::uint64_t>(num_vertices))]);
    edge.range.assign(range.begin(), range.end());
    raw.edges.push_back(std::move(edge));
  }
  return validate(raw);
}

} // namespace sga
