#include "sga/corpus.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace sga {

namespace {

// Candidate groupoid over indices 0..n-1 where 0..u-1 are the units.
struct Candidate {
  int n = 0, u = 0;
  std::vector<int> src, dst;  // values in [0, u)
  std::vector<int> inv;
  std::vector<std::vector<int>> comp;  // -1 undetermined / non-composable
};

// Encoding for canonical deduplication: relabel morphisms by any permutation
// mapping units to units, take the lexicographically smallest serialization.
std::string canonical_encoding(const Candidate& c) {
  std::vector<int> unit_perm(c.u), rest_perm(c.n - c.u);
  std::iota(unit_perm.begin(), unit_perm.end(), 0);
  std::iota(rest_perm.begin(), rest_perm.end(), c.u);
  std::string best;
  std::vector<int> perm(c.n);
  do {
    std::vector<int> rp = rest_perm;
    std::sort(rp.begin(), rp.end());
    do {
      for (int i = 0; i < c.u; ++i) perm[unit_perm[i]] = i;
      for (int i = c.u; i < c.n; ++i) perm[rp[static_cast<std::size_t>(i - c.u)]] = i;
      std::string enc;
      enc.reserve(static_cast<std::size_t>(c.n) * (c.n + 3));
      auto append = [&enc](int v) { enc += static_cast<char>('A' + v + 1); };
      std::vector<int> inv_perm(c.n);
      for (int i = 0; i < c.n; ++i) inv_perm[perm[i]] = i;
      for (int i = 0; i < c.n; ++i) append(perm[c.src[inv_perm[i]] == -1 ? 0 : c.src[inv_perm[i]]]);
      for (int i = 0; i < c.n; ++i) append(perm[c.dst[inv_perm[i]]]);
      for (int i = 0; i < c.n; ++i) append(perm[c.inv[inv_perm[i]]]);
      for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
          const int v = c.comp[inv_perm[i]][inv_perm[j]];
          append(v < 0 ? -1 : perm[v]);
        }
      if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(rp.begin(), rp.end()));
  } while (std::next_permutation(unit_perm.begin(), unit_perm.end()));
  return best;
}

Groupoid realize(const Candidate& c) {
  RawGroupoid raw;
  auto obj = [](int e) { return "u" + std::to_string(e); };
  auto mor = [&c, &obj](int m) { return m < c.u ? obj(m) : "m" + std::to_string(m); };
  for (int e = 0; e < c.u; ++e) raw.objects.push_back(obj(e));
  for (int m = 0; m < c.n; ++m) raw.morphisms.push_back({mor(m), obj(c.src[m]), obj(c.dst[m])});
  for (int e = 0; e < c.u; ++e) raw.identity[obj(e)] = mor(e);
  for (int m = 0; m < c.n; ++m) raw.inverse[mor(m)] = mor(c.inv[m]);
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b)
      if (c.comp[a][b] >= 0) raw.compose.push_back({mor(a), mor(b), mor(c.comp[a][b])});
  return validate(raw);
}

// Fills the undetermined composition entries by backtracking with
// cancellation pruning; collects every fully consistent table.
void fill_compositions(Candidate& c, std::vector<std::pair<int, int>>& todo, std::size_t k,
                       std::vector<Groupoid>& out, std::set<std::string>& seen) {
  if (k == todo.size()) {
    try {
      Groupoid g = realize(c);
      if (seen.insert(canonical_encoding(c)).second) out.push_back(std::move(g));
    } catch (const ValidationError&) {
    }
    return;
  }
  const auto [a, b] = todo[k];
  for (int v = 0; v < c.n; ++v) {
    if (c.src[v] != c.src[b] || c.dst[v] != c.dst[a]) continue;
    // left/right cancellation with already-fixed entries
    bool ok = true;
    for (int bb = 0; bb < c.n && ok; ++bb)
      if (bb != b && c.comp[a][bb] == v) ok = false;
    for (int aa = 0; aa < c.n && ok; ++aa)
      if (aa != a && c.comp[aa][b] == v) ok = false;
    if (!ok) continue;
    c.comp[a][b] = v;
    // incremental associativity on fully determined triples
    bool assoc = true;
    for (int x = 0; x < c.n && assoc; ++x)
      for (int y = 0; y < c.n && assoc; ++y)
        for (int z = 0; z < c.n && assoc; ++z) {
          if (c.src[x] != c.dst[y] || c.src[y] != c.dst[z]) continue;
          const int xy = c.comp[x][y], yz = c.comp[y][z];
          if (xy < 0 || yz < 0) continue;
          const int l = c.comp[xy][z], r = c.comp[x][yz];
          if (l >= 0 && r >= 0 && l != r) assoc = false;
        }
    if (assoc) fill_compositions(c, todo, k + 1, out, seen);
    c.comp[a][b] = -1;
  }
}

} // namespace

std::vector<Groupoid> enumerate_groupoids(int max_morphisms) {
  std::vector<Groupoid> out;
  std::set<std::string> seen;

  for (int n = 1; n <= max_morphisms; ++n)
    for (int u = 1; u <= n; ++u) {
      Candidate c;
      c.n = n;
      c.u = u;
      c.src.assign(n, -1);
      c.dst.assign(n, -1);
      c.inv.assign(n, -1);
      for (int e = 0; e < u; ++e) {
        c.src[e] = e;
        c.dst[e] = e;
        c.inv[e] = e;
      }
      // enumerate src/dst for the non-units
      const int m = n - u;
      std::vector<int> sd(static_cast<std::size_t>(2 * m), 0);
      bool done_sd = m == 0;
      for (;;) {
        for (int i = 0; i < m; ++i) {
          c.src[u + i] = sd[static_cast<std::size_t>(2 * i)];
          c.dst[u + i] = sd[static_cast<std::size_t>(2 * i) + 1];
        }
        // enumerate inverse involutions consistent with src/dst swap
        std::vector<int> assigned(static_cast<std::size_t>(m), -1);
        // recursive matching over non-units
        std::function<void(int)> match = [&](int i) {
          if (i == m) {
            for (int j = 0; j < m; ++j) c.inv[u + j] = u + assigned[static_cast<std::size_t>(j)];
            // set up composition entries: known ones from units/inverses
            c.comp.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
            bool consistent = true;
            auto set_entry = [&c, &consistent](int a, int b, int v) {
              if (c.src[a] != c.dst[b]) { consistent = false; return; }
              int& slot = c.comp[a][b];
              if (slot >= 0 && slot != v) { consistent = false; return; }
              slot = v;
            };
            for (int a = 0; a < n && consistent; ++a) {
              if (c.src[a] < u) set_entry(a, c.src[a], a);       // a ∘ id_src = a
              if (c.dst[a] < u) set_entry(c.dst[a], a, a);       // id_dst ∘ a = a
              set_entry(a, c.inv[a], c.dst[a]);                  // a ∘ a⁻¹ = id_range
              set_entry(c.inv[a], a, c.src[a]);                  // a⁻¹ ∘ a = id_source
            }
            if (!consistent) return;
            std::vector<std::pair<int, int>> todo;
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                if (c.src[a] == c.dst[b] && c.comp[a][b] < 0) todo.emplace_back(a, b);
            fill_compositions(c, todo, 0, out, seen);
            return;
          }
          if (assigned[static_cast<std::size_t>(i)] != -1) { match(i + 1); return; }
          // pair i with j >= i having swapped src/dst
          for (int j = i; j < m; ++j) {
            if (assigned[static_cast<std::size_t>(j)] != -1) continue;
            if (c.src[u + i] != c.dst[u + j] || c.dst[u + i] != c.src[u + j]) continue;
            assigned[static_cast<std::size_t>(i)] = j;
            assigned[static_cast<std::size_t>(j)] = i;
            match(i + 1);
            assigned[static_cast<std::size_t>(i)] = -1;
            assigned[static_cast<std::size_t>(j)] = -1;
          }
        };
        match(0);

        if (done_sd) break;
        // advance sd counter in base u
        std::size_t pos = 0;
        while (pos < sd.size()) {
          if (++sd[pos] < u) break;
          sd[pos++] = 0;
        }
        if (pos == sd.size()) break;
      }
    }
  return out;
}

std::vector<PartialAction> enumerate_actions(const Groupoid& g, int max_points) {
  std::vector<PartialAction> out;
  std::set<std::string> seen;

  // Representatives of the non-unit inverse pairs.
  std::vector<int> reps, selfinv;
  for (int m = 0; m < g.num_morphisms(); ++m) {
    if (g.is_unit(m)) continue;
    if (g.inv[m] == m) selfinv.push_back(m);
    else if (m < g.inv[m]) reps.push_back(m);
  }

  for (int npts = 0; npts <= max_points; ++npts) {
    // labelings: point -> object
    std::vector<int> label(static_cast<std::size_t>(npts), 0);
    for (;;) {
      PartialAction base;
      base.g = g;
      for (int x = 0; x < npts; ++x) base.point_ids.push_back("x" + std::to_string(x));
      base.unit_of.assign(label.begin(), label.end());
      const int n = g.num_morphisms();
      base.dom.assign(n, 0);
      base.theta.assign(n, std::vector<int>(std::max(npts, 1), -1));
      for (int e = 0; e < g.num_objects(); ++e) {
        const int uu = g.unit[e];
        base.dom[uu] = base.block(e);
        for (int x : bits_of(base.dom[uu])) base.theta[uu][x] = x;
      }

      // enumerate (domain, bijection) choices per representative
      struct Choice {
        Mask dom_g, dom_ginv;
        std::vector<std::pair<int, int>> map;  // theta_g as pairs (from, to)
      };
      std::vector<std::vector<Choice>> options;
      for (int r : reps) {
        std::vector<Choice> opts;
        const Mask blk_r = base.block(g.dst[r]);
        const Mask blk_s = base.block(g.src[r]);
        for (Mask dg = 0;; dg = (dg - blk_r) & blk_r) {
          // iterate subsets of blk_r via standard subset trick
          for (Mask dh = 0;; dh = (dh - blk_s) & blk_s) {
            if (popcount(dg) == popcount(dh)) {
              // all bijections dom_ginv=dh -> dom_g=dg
              std::vector<int> from = bits_of(dh), to = bits_of(dg);
              std::sort(to.begin(), to.end());
              do {
                Choice ch;
                ch.dom_g = dg;
                ch.dom_ginv = dh;
                for (std::size_t i = 0; i < from.size(); ++i)
                  ch.map.emplace_back(from[i], to[i]);
                opts.push_back(std::move(ch));
              } while (std::next_permutation(to.begin(), to.end()));
            }
            if (dh == blk_s) break;
          }
          if (dg == blk_r) break;
        }
        options.push_back(std::move(opts));
      }
      for (int r : selfinv) {
        std::vector<Choice> opts;
        const Mask blk = base.block(g.dst[r]);
        for (Mask dg = 0;; dg = (dg - blk) & blk) {
          // involutions of dg
          std::vector<int> pts = bits_of(dg);
          std::vector<int> pairing(pts.size(), -1);
          std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == pts.size()) {
              Choice ch;
              ch.dom_g = dg;
              ch.dom_ginv = dg;
              for (std::size_t a = 0; a < pts.size(); ++a)
                ch.map.emplace_back(pts[a], pts[pairing[a]]);
              opts.push_back(std::move(ch));
              return;
            }
            if (pairing[i] != -1) { rec(i + 1); return; }
            pairing[i] = static_cast<int>(i);
            rec(i + 1);
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
              if (pairing[j] != -1) continue;
              pairing[i] = static_cast<int>(j);
              pairing[j] = static_cast<int>(i);
              rec(i + 1);
              pairing[j] = -1;
            }
            pairing[i] = -1;
          };
          rec(0);
          if (dg == blk) break;
        }
        options.push_back(std::move(opts));
      }

      // Cartesian product over rep choices.
      std::vector<std::size_t> idx(options.size(), 0);
      for (;;) {
        PartialAction a = base;
        std::size_t oi = 0;
        for (int r : reps) {
          const Choice& ch = options[oi][idx[oi]];
          ++oi;
          a.dom[r] = ch.dom_g;
          a.dom[g.inv[r]] = ch.dom_ginv;
          for (auto [from, to] : ch.map) {
            a.theta[r][from] = to;
            a.theta[g.inv[r]][to] = from;
          }
        }
        for (int r : selfinv) {
          const Choice& ch = options[oi][idx[oi]];
          ++oi;
          a.dom[r] = ch.dom_g;
          for (auto [from, to] : ch.map) a.theta[r][from] = to;
        }
        bool valid = true;
        try {
          check_axioms(a);
        } catch (const ValidationError&) {
          valid = false;
        }
        if (valid) {
          // canonical form under point relabeling
          std::vector<int> perm(static_cast<std::size_t>(npts));
          std::iota(perm.begin(), perm.end(), 0);
          std::string best;
          do {
            std::string enc;
            for (int x = 0; x < npts; ++x)
              enc += static_cast<char>('a' + a.unit_of[perm[static_cast<std::size_t>(x)]]);
            for (int m = 0; m < g.num_morphisms(); ++m) {
              Mask d = 0;
              for (int x = 0; x < npts; ++x)
                if (bit(a.dom[m], perm[static_cast<std::size_t>(x)])) d = with_bit(d, x);
              enc += std::to_string(d) + ",";
            }
            std::vector<int> inv_perm(static_cast<std::size_t>(npts));
            for (int x = 0; x < npts; ++x) inv_perm[perm[static_cast<std::size_t>(x)]] = x;
            for (int m = 0; m < g.num_morphisms(); ++m)
              for (int x = 0; x < npts; ++x) {
                const int y = a.theta[m][perm[static_cast<std::size_t>(x)]];
                enc += y < 0 ? "." : std::to_string(inv_perm[static_cast<std::size_t>(y)]);
              }
            if (best.empty() || enc < best) best = enc;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (seen.insert(best).second) out.push_back(std::move(a));
        }

        // advance product counter
        std::size_t pos = 0;
        while (pos < idx.size()) {
          if (++idx[pos] < options[pos].size()) break;
          idx[pos++] = 0;
        }
        if (idx.empty() || pos == idx.size()) break;
      }

      // advance labeling counter
      std::size_t pos = 0;
      while (pos < label.size()) {
        if (++label[pos] < g.num_objects()) break;
        label[pos++] = 0;
      }
      if (label.empty() || pos == label.size()) break;
    }
  }
  return out;
}

std::vector<PartialAction> micro_corpus(int max_morphisms, int max_points) {
  std::vector<PartialAction> out;
  for (const Groupoid& g : enumerate_groupoids(max_morphisms)) {
    auto actions = enumerate_actions(g, max_points);
    out.insert(out.end(), actions.begin(), actions.end());
  }
  return out;
}

std::vector<PartialAction> random_corpus(std::uint64_t seed, int count,
                                         const ActionBounds& bounds) {
  std::vector<PartialAction> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_instance(seed + static_cast<std::uint64_t>(i) * 7919u, bounds));
  return out;
}

} // namespace sga
