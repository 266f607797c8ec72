#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/groupoid.hpp"

using namespace sga;

TEST_CASE("two-element group validates") {
  const Groupoid g = fixtures::z2();
  CHECK(g.num_objects() == 1);
  CHECK(g.num_morphisms() == 2);
  const int e = g.morphism_index("e"), gg = g.morphism_index("g");
  CHECK(g.compose(gg, gg) == e);
  CHECK(g.inv[gg] == gg);
}

TEST_CASE("pair groupoid validates") {
  const Groupoid g = pair_groupoid(2);
  CHECK(g.num_objects() == 2);
  CHECK(g.num_morphisms() == 4);
  const int h = g.morphism_index("p10");
  CHECK(g.object_ids[g.src[h]] == "o0");
  CHECK(g.object_ids[g.dst[h]] == "o1");
  CHECK(g.inv[h] == g.morphism_index("p01"));
}

TEST_CASE("non-composable product is rejected") {
  RawGroupoid raw = to_raw(pair_groupoid(2));
  raw.compose.push_back({"p10", "p10", "p10"});  // src(p10) = o0 != o1 = dst(p10)
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(raw)),
                       doctest::Contains("non-composable"), ValidationError);
}

TEST_CASE("missing composition is rejected") {
  RawGroupoid raw = to_raw(fixtures::z2());
  raw.compose.pop_back();
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(raw)),
                       doctest::Contains("missing composition"), ValidationError);
}

TEST_CASE("bad inverse is rejected") {
  RawGroupoid raw = to_raw(pair_groupoid(2));
  raw.inverse["p10"] = "p10";  // source/range do not swap
  CHECK_THROWS_AS(static_cast<void>(validate(raw)), ValidationError);
}

TEST_CASE("isotropy groups") {
  CHECK(isotropy_group(fixtures::z2(), std::string("e")) ==
        std::vector<std::string>{"e", "g"});
  CHECK(isotropy_group(pair_groupoid(2), std::string("o0")) == std::vector<std::string>{"p00"});

  // isotropy of a disjoint union keeps the parts separate
  const Groupoid u = disjoint_union(fixtures::z2(), pair_groupoid(2));
  const auto iso = isotropy_group(u, std::string("a:e"));
  CHECK(iso == std::vector<std::string>{"a:e", "a:g"});

  CHECK_THROWS_AS(static_cast<void>(isotropy_group(fixtures::z2(), std::string("nope"))),
                  ValidationError);
}

TEST_CASE("isotropy is closed under composition and inverse") {
  const Groupoid u = disjoint_union(fixtures::z3(), pair_groupoid(2));
  for (int e = 0; e < u.num_objects(); ++e) {
    const auto iso = isotropy_group(u, e);
    for (int a : iso) {
      CHECK(std::find(iso.begin(), iso.end(), u.inv[a]) != iso.end());
      for (int b : iso)
        CHECK(std::find(iso.begin(), iso.end(), u.compose(a, b)) != iso.end());
    }
  }
}

TEST_CASE("from_group rejects non-groups") {
  // a magma with no identity
  CHECK_THROWS_WITH_AS(static_cast<void>(from_group({"a", "b"}, {{0, 0}, {0, 0}})),
                       doctest::Contains("identity"), ValidationError);
  // non-associative table: x*y = constant row tricks
  CHECK_THROWS_AS(static_cast<void>(from_group({"a", "b", "c"},
                                               {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}})),
                  ValidationError);
}

TEST_CASE("from_group builds cyclic groups") {
  const Groupoid g3 = fixtures::z3();
  CHECK(g3.num_morphisms() == 3);
  CHECK(g3.num_objects() == 1);
  for (int e = 0; e < g3.num_objects(); ++e)
    CHECK(isotropy_group(g3, e).size() == 3);
}

TEST_CASE("pair groupoid counts") {
  CHECK(pair_groupoid(1).num_morphisms() == 1);
  CHECK(pair_groupoid(3).num_morphisms() == 9);
  for (int e = 0; e < 3; ++e) CHECK(isotropy_group(pair_groupoid(3), e).size() == 1);
  CHECK_THROWS_AS(static_cast<void>(pair_groupoid(0)), ValidationError);
}

TEST_CASE("composable pairs") {
  CHECK(composable_pairs(fixtures::z2()).size() == 4);
  CHECK(composable_pairs(pair_groupoid(2)).size() == 8);
  const Groupoid u = disjoint_union(fixtures::z2(), fixtures::z2());
  CHECK(composable_pairs(u).size() == 8);  // no cross pairs
}

TEST_CASE("structural invariants") {
  for (const Groupoid& g : {fixtures::z2(), fixtures::z3(), pair_groupoid(3),
                            disjoint_union(fixtures::z2(), pair_groupoid(2))}) {
    int units = 0;
    for (int m = 0; m < g.num_morphisms(); ++m) {
      CHECK(g.inv[g.inv[m]] == m);
      units += g.is_unit(m);
    }
    CHECK(units == g.num_objects());
    for (int e = 0; e < g.num_objects(); ++e) CHECK(g.inv[g.unit[e]] == g.unit[e]);
  }
}

TEST_CASE("morphism cap enforced") {
  CHECK_THROWS_WITH_AS(static_cast<void>(pair_groupoid(9)), doctest::Contains("too large"),
                       ValidationError);
}
