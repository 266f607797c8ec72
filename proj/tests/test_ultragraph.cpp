#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/ultragraph.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace sga;

namespace {

// Brute-force loop enumeration for cross-validation on tiny graphs.
void all_loops_at(const Ultragraph& u, int v, int max_len, Path& cur, std::vector<Path>& out) {
  const int last = cur.empty() ? -1 : cur.back();
  for (int e = 0; e < u.num_edges(); ++e) {
    const bool fits = cur.empty() ? u.esrc[e] == v : bit(u.erange[last], u.esrc[e]);
    if (!fits) continue;
    cur.push_back(e);
    if (bit(u.erange[e], v)) out.push_back(cur);
    if (static_cast<int>(cur.size()) < max_len) all_loops_at(u, v, max_len, cur, out);
    cur.pop_back();
  }
}

std::vector<Path> loops_at(const Ultragraph& u, int v, int max_len) {
  Path cur;
  std::vector<Path> out;
  all_loops_at(u, v, max_len, cur, out);
  return out;
}

bool is_simple_loop_at(const Ultragraph& u, const Path& p, int v) {
  if (!is_loop(u, p) || u.esrc[p.front()] != v) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (u.esrc[p[i]] == v) return false;
  return true;
}

// Long-prefix word comparison used to certify the bounded comparison.
bool brute_recurrent(const Ultragraph& u, const Path& gamma, const Path& rho, int prefix) {
  (void)u;
  auto gamma_letter = [&](long long k) {
    return gamma[static_cast<std::size_t>(k % static_cast<long long>(gamma.size()))];
  };
  const long long glen = static_cast<long long>(gamma.size());
  const long long rlen = static_cast<long long>(rho.size());
  for (long long k = 0; k < prefix; ++k) {
    int lhs;
    if (k < glen) lhs = gamma[static_cast<std::size_t>(k)];
    else if (k < glen + rlen) lhs = rho[static_cast<std::size_t>(k - glen)];
    else lhs = gamma_letter(k - glen - rlen);
    if (lhs != gamma_letter(k)) return true;
  }
  return false;
}

} // namespace

TEST_CASE("validation") {
  CHECK(fixtures::fix_u1().num_edges() == 1);
  CHECK(fixtures::fix_u3().num_vertices() == 2);

  RawUltragraph raw;
  raw.vertices = {"v"};
  raw.edges = {{"e", "v", {}}};
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(raw)), doctest::Contains("empty range"),
                       ValidationError);

  RawUltragraph raw2;
  raw2.vertices = {"v"};
  raw2.edges = {{"e", "w", {"v"}}};
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(raw2)), doctest::Contains("unknown vertex"),
                       ValidationError);
}

TEST_CASE("vertex set families") {
  const Ultragraph u1 = fixtures::fix_u1();
  CHECK(generalized_vertices(u1) == std::vector<Mask>{0, 1});
  CHECK(accommodating_family(u1) == std::vector<Mask>{0, 1});

  const Ultragraph u3 = fixtures::fix_u3();
  CHECK(accommodating_family(u3).size() == 4);  // full powerset on two vertices

  // singletons are always present, even for untouched vertices
  RawUltragraph raw;
  raw.vertices = {"a", "b", "c"};
  raw.edges = {{"e", "a", {"a", "b"}}};
  const Ultragraph u = validate(raw);
  const auto family = generalized_vertices(u);
  CHECK(std::find(family.begin(), family.end(), with_bit(Mask{0}, u.vertex_index("c"))) !=
        family.end());
}

TEST_CASE("family closure properties") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 4, 5);
    const auto gv = generalized_vertices(u);
    const auto acc = accommodating_family(u);
    // generalized vertices sit inside the accommodating family
    for (Mask m : gv) CHECK(std::find(acc.begin(), acc.end(), m) != acc.end());
    // closure under the three operations
    for (Mask x : acc)
      for (Mask y : acc) {
        CHECK(std::find(acc.begin(), acc.end(), x | y) != acc.end());
        CHECK(std::find(acc.begin(), acc.end(), x & y) != acc.end());
        CHECK(std::find(acc.begin(), acc.end(), x & ~y) != acc.end());
      }
  }
}

TEST_CASE("relative ranges") {
  const Ultragraph u = fixtures::fix_u3();
  const int e = u.edge_index("e");
  const Mask v = with_bit(Mask{0}, u.vertex_index("v"));
  const Mask w = with_bit(Mask{0}, u.vertex_index("w"));
  CHECK(relative_range(u, v, {e}) == u.erange[e]);
  CHECK(relative_range(u, w, {e}) == 0);
  CHECK(relative_range(u, v, {}) == v);
  CHECK_THROWS_AS(static_cast<void>(
                      relative_range(u, v, {u.edge_index("f"), u.edge_index("f")})),
                  ValidationError);
}

TEST_CASE("weak left-resolving identity for short paths") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 4, 5);
    const auto family = accommodating_family(u);
    // all paths of length <= 2
    std::vector<Path> paths;
    for (int e = 0; e < u.num_edges(); ++e) {
      paths.push_back({e});
      for (int f = 0; f < u.num_edges(); ++f)
        if (bit(u.erange[e], u.esrc[f])) paths.push_back({e, f});
    }
    for (Mask a : family)
      for (Mask b : family)
        for (const Path& p : paths)
          CHECK(relative_range(u, a & b, p) ==
                (relative_range(u, a, p) & relative_range(u, b, p)));
  }
}

TEST_CASE("simple loop counts on the fixtures") {
  const Ultragraph u1 = fixtures::fix_u1();
  CHECK(simple_loop_count_at(u1, u1.vertex_index("v")) == LoopCount::one);
  const Ultragraph u2 = fixtures::fix_u2();
  CHECK(simple_loop_count_at(u2, u2.vertex_index("v")) == LoopCount::many);
  const Ultragraph u3 = fixtures::fix_u3();
  CHECK(simple_loop_count_at(u3, u3.vertex_index("v")) == LoopCount::many);
  CHECK(simple_loop_count_at(u3, u3.vertex_index("w")) == LoopCount::many);
  CHECK_THROWS_AS(static_cast<void>(simple_loop_count_at(u1, 4)), ValidationError);
}

TEST_CASE("simple loop counts agree with brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 3, 4);
    for (int v = 0; v < u.num_vertices(); ++v) {
      // simple loops cannot be longer than |edges| + 1 steps without
      // revisiting the base... they can repeat inner edges, so bound by a
      // generous length and rely on the cycle detector for "many".
      std::set<Path> simple;
      for (const Path& p : loops_at(u, v, u.num_edges() + 2))
        if (is_simple_loop_at(u, p, v)) simple.insert(p);
      const LoopCount got = simple_loop_count_at(u, v);
      if (simple.empty()) {
        CHECK(got == LoopCount::none);
      } else if (simple.size() == 1) {
        // a unique short simple loop could still have longer companions;
        // re-enumerate with a longer bound before trusting "one"
        std::set<Path> more;
        for (const Path& p : loops_at(u, v, u.num_edges() + 4))
          if (is_simple_loop_at(u, p, v)) more.insert(p);
        CHECK(got == (more.size() == 1 ? LoopCount::one : LoopCount::many));
      } else {
        CHECK(got == LoopCount::many);
      }
    }
  }
}

TEST_CASE("unique simple loop reconstruction") {
  const Ultragraph u1 = fixtures::fix_u1();
  const auto loop = unique_simple_loop_at(u1, u1.vertex_index("v"));
  REQUIRE(loop.has_value());
  CHECK(*loop == Path{u1.edge_index("e")});
  CHECK(!unique_simple_loop_at(fixtures::fix_u2(), 0).has_value());
}

TEST_CASE("condition K on the fixtures") {
  CHECK(!condition_k(fixtures::fix_u1()).holds);
  CHECK(condition_k(fixtures::fix_u2()).holds);
  CHECK(condition_k(fixtures::fix_u3()).holds);

  // loop-free graphs satisfy the condition vacuously
  RawUltragraph raw;
  raw.vertices = {"a", "b"};
  raw.edges = {{"e", "a", {"b"}}};
  CHECK(condition_k(validate(raw)).holds);
}

TEST_CASE("condition K is invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 5, 6);
    // relabel by permuting ids
    RawUltragraph raw = to_raw(u);
    std::vector<std::string> vperm = raw.vertices;
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < vperm.size(); ++i) rename[raw.vertices[i]] = vperm[i];
    for (auto& e : raw.edges) {
      e.source = rename[e.source];
      for (auto& r : e.range) r = rename[r];
      e.id = "z" + e.id;
    }
    for (auto& v : raw.vertices) v = rename[v];
    CHECK(condition_k(validate(raw)).holds == condition_k(u).holds);
  }
}

TEST_CASE("exits of loops") {
  CHECK(exits_of_loop(fixtures::fix_u1(), {0}).empty());

  const Ultragraph u2 = fixtures::fix_u2();
  const auto exits = exits_of_loop(u2, {u2.edge_index("e")});
  REQUIRE(exits.size() == 1);
  CHECK(exits[0].position == 1);
  CHECK(exits[0].edge == u2.edge_index("f"));

  const Ultragraph u3 = fixtures::fix_u3();
  const auto exits3 = exits_of_loop(u3, {u3.edge_index("e"), u3.edge_index("f")});
  // the loop ef: from r(e) = {v,w} the edge e itself exits (f is next);
  // from r(f) = {v} the edge f... e is next cyclically, so e exits there too
  bool found_edge_exit = false;
  for (const auto& ex : exits3) found_edge_exit = found_edge_exit || ex.edge >= 0;
  CHECK(found_edge_exit);

  CHECK_THROWS_AS(static_cast<void>(exits_of_loop(u3, {u3.edge_index("f")})), ValidationError);
}

TEST_CASE("sink exits are reported") {
  RawUltragraph raw;
  raw.vertices = {"a", "b"};
  raw.edges = {{"e", "a", {"a", "b"}}};  // b is a sink
  const Ultragraph u = validate(raw);
  const auto exits = exits_of_loop(u, {0});
  REQUIRE(exits.size() == 1);
  CHECK(exits[0].sink == u.vertex_index("b"));
}

TEST_CASE("pairwise recurrence") {
  const Ultragraph u1 = fixtures::fix_u1();
  const Path e = {u1.edge_index("e")};
  CHECK(!is_recurrent(u1, e, e));  // powers of the loop are never witnesses

  const Ultragraph u2 = fixtures::fix_u2();
  const Path ee = {u2.edge_index("e")};
  const Path ff = {u2.edge_index("f")};
  CHECK(is_recurrent(u2, ee, ff));
  CHECK(!is_recurrent(u2, ee, ee));

  // loops at different sources cannot be companions: e at v, fe at w
  const Ultragraph u3 = fixtures::fix_u3();
  const Path at_v = {u3.edge_index("e")};
  const Path at_w = {u3.edge_index("f"), u3.edge_index("e")};
  CHECK_THROWS_WITH_AS(static_cast<void>(is_recurrent(u3, at_v, at_w)),
                       doctest::Contains("different source"), ValidationError);
}

TEST_CASE("powers of the loop are never witnesses") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 3, 4);
    for (int v = 0; v < u.num_vertices(); ++v)
      for (const Path& gamma : loops_at(u, v, 3))
        for (int k = 1; k <= 3; ++k) {
          Path power;
          for (int i = 0; i < k; ++i) power.insert(power.end(), gamma.begin(), gamma.end());
          CHECK(!is_recurrent(u, gamma, power));
        }
  }
}

TEST_CASE("bounded comparison certifies the infinite comparison") {
  // the prefix bound |gamma| + |rho| + |gamma| decides equality: compare
  // against a much longer brute-force prefix
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 3, 5);
    for (int v = 0; v < u.num_vertices(); ++v) {
      const auto loops = loops_at(u, v, 4);
      for (const Path& gamma : loops)
        for (const Path& rho : loops) {
          const int big = 8 * static_cast<int>(gamma.size() + rho.size()) + 64;
          CHECK(is_recurrent(u, gamma, rho) == brute_recurrent(u, gamma, rho, big));
        }
    }
  }
}

TEST_CASE("witness search agrees with brute-force search") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 3, 4);
    for (int v = 0; v < u.num_vertices(); ++v) {
      for (const Path& gamma : loops_at(u, v, 3)) {
        const int bound = 5;
        bool brute = false;
        for (const Path& rho : loops_at(u, v, bound))
          brute = brute || is_recurrent(u, gamma, rho);
        const auto witness = recurrence_witness(u, gamma, bound);
        CHECK(witness.has_value() == brute);
        if (witness.has_value()) {
          CHECK(static_cast<int>(witness->size()) <= bound);
          CHECK(is_recurrent(u, gamma, *witness));
        }
      }
    }
  }
}

TEST_CASE("recurrence on the fixtures") {
  const Ultragraph u1 = fixtures::fix_u1();
  CHECK(!is_recurrent_any(u1, {u1.edge_index("e")}, 12));
  const Ultragraph u2 = fixtures::fix_u2();
  CHECK(is_recurrent_any(u2, {u2.edge_index("e")}, 12));
  CHECK(default_recurrence_bound(u2, {u2.edge_index("e")}) == 4);
}

TEST_CASE("kr consistency on the fixtures") {
  const KrReport k1 = check_kr(fixtures::fix_u1(), 12);
  CHECK(!k1.condition_k);
  CHECK(!k1.bounded_recurrent);
  CHECK(k1.consistent);
  REQUIRE(k1.per_vertex.size() == 1);
  REQUIRE(k1.per_vertex[0].transitory_loop.has_value());

  const KrReport k2 = check_kr(fixtures::fix_u2(), 12);
  CHECK(k2.condition_k);
  CHECK(k2.bounded_recurrent);
  CHECK(k2.consistent);

  const KrReport k3 = check_kr(fixtures::fix_u3(), 12);
  CHECK(k3.condition_k);
  CHECK(k3.bounded_recurrent);
  CHECK(k3.consistent);
}

TEST_CASE("bounded recurrence side agrees with brute force on tiny graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const Ultragraph u = random_ultragraph(rng(), 3, 4);
    const int bound = 5;
    bool brute_all_recurrent = true;
    for (int v = 0; v < u.num_vertices() && brute_all_recurrent; ++v)
      for (const Path& gamma : loops_at(u, v, bound)) {
        bool witnessed = false;
        for (const Path& rho : loops_at(u, v, bound))
          witnessed = witnessed || is_recurrent(u, gamma, rho);
        if (!witnessed) { brute_all_recurrent = false; break; }
      }
    CHECK(check_kr(u, bound).bounded_recurrent == brute_all_recurrent);
  }
}

TEST_CASE("random ultragraphs are valid and deterministic") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Ultragraph u = random_ultragraph(seed, 6, 8);
    CHECK(u.num_vertices() == 6);
    CHECK(u.num_edges() == 8);
    const Ultragraph again = random_ultragraph(seed, 6, 8);
    CHECK(to_raw(u).edges.size() == to_raw(again).edges.size());
    for (int e = 0; e < u.num_edges(); ++e) {
      CHECK(u.esrc[e] == again.esrc[e]);
      CHECK(u.erange[e] == again.erange[e]);
    }
  }
}
