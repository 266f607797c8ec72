#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/partial_action.hpp"

using namespace sga;

namespace {

Mask mask_of(const PartialAction& a, std::initializer_list<const char*> pts) {
  Mask m = 0;
  for (const char* p : pts) m = with_bit(m, a.point_index(p));
  return m;
}

} // namespace

TEST_CASE("fixtures validate") {
  CHECK(fixtures::fix_a().num_points() == 1);
  CHECK(fixtures::fix_b().num_points() == 2);
  CHECK(fixtures::fix_c().num_points() == 3);
  CHECK(fixtures::fix_d().num_points() == 2);
}

TEST_CASE("non-bijective map is rejected") {
  RawPartialAction raw = to_raw(fixtures::fix_c());
  raw.domain["g"] = {"x1", "x2"};
  raw.map["g"] = {{"x1", "x1"}};  // domain and codomain sizes differ
  CHECK_THROWS_WITH_AS(static_cast<void>(validate(raw)), doctest::Contains("bijection"),
                       ValidationError);
}

TEST_CASE("map outside the domain is rejected") {
  RawPartialAction raw = to_raw(fixtures::fix_b());
  raw.map["g"]["x1"] = "x1";
  raw.map["g"]["x2"] = "x1";
  CHECK_THROWS_AS(static_cast<void>(validate(raw)), ValidationError);
}

TEST_CASE("domain containment violations are caught") {
  // putting x3 in the domain of g while theta_g cannot reach it
  RawPartialAction raw = to_raw(fixtures::fix_c());
  raw.domain["g"] = {"x1", "x2", "x3"};
  CHECK_THROWS_AS(static_cast<void>(validate(raw)), ValidationError);
}

TEST_CASE("compatibility axiom is checked") {
  // three-element cyclic group acting on two points cannot close up
  RawPartialAction raw;
  raw.groupoid = to_raw(fixtures::z3());
  raw.points = {{"x1", "e"}, {"x2", "e"}};
  raw.domain["e"] = {"x1", "x2"};
  raw.domain["g"] = {"x1", "x2"};
  raw.domain["h"] = {"x1", "x2"};
  raw.map["e"] = {{"x1", "x1"}, {"x2", "x2"}};
  raw.map["g"] = {{"x1", "x2"}, {"x2", "x1"}};  // an involution cannot have order 3
  raw.map["h"] = {{"x1", "x2"}, {"x2", "x1"}};
  CHECK_THROWS_AS(static_cast<void>(validate(raw)), ValidationError);
}

TEST_CASE("globality") {
  CHECK(is_global(fixtures::fix_a()));
  CHECK(is_global(fixtures::fix_b()));
  CHECK(!is_global(fixtures::fix_c()));
  CHECK(is_global(fixtures::fix_d()));
}

TEST_CASE("fibred round trip") {
  for (const PartialAction& a :
       {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_d()}) {
    const FibredAction f = to_fibred(a);
    CHECK(fingerprint(from_fibred(f)) == fingerprint(a));
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(to_fibred(fixtures::fix_c())),
                       doctest::Contains("not global"), ValidationError);
}

TEST_CASE("fibred anchors match unit labels") {
  const FibredAction f = to_fibred(fixtures::fix_d());
  for (int x = 0; x < 2; ++x)
    CHECK(f.anchor[x] == fixtures::fix_d().unit_of[x]);
}

TEST_CASE("orbits") {
  const PartialAction c = fixtures::fix_c();
  CHECK(orbit(c, c.point_index("x1")) == mask_of(c, {"x1", "x2"}));
  CHECK(orbit(c, c.point_index("x3")) == mask_of(c, {"x3"}));
  const PartialAction d = fixtures::fix_d();
  CHECK(orbit(d, d.point_index("a")) == mask_of(d, {"a", "b"}));
  CHECK_THROWS_AS(static_cast<void>(orbit(c, 17)), ValidationError);
}

TEST_CASE("invariant subsets") {
  const PartialAction c = fixtures::fix_c();
  const std::vector<Mask> expected = {0, mask_of(c, {"x3"}), mask_of(c, {"x1", "x2"}),
                                      c.all_points()};
  CHECK(invariant_subsets(c) == expected);

  const PartialAction b = fixtures::fix_b();
  CHECK(invariant_subsets(b) == std::vector<Mask>{0, b.all_points()});
}

TEST_CASE("invariant subsets equal the exhaustive scan") {
  for (const PartialAction& a :
       {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_c(), fixtures::fix_d()}) {
    std::vector<Mask> brute;
    for (Mask m = 0; m < (Mask{1} << a.num_points()); ++m)
      if (is_invariant(a, m)) brute.push_back(m);
    std::sort(brute.begin(), brute.end(), [](Mask x, Mask y) {
      if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
      return x < y;
    });
    CHECK(brute == invariant_subsets(a));
  }
}

TEST_CASE("minimality and transitivity") {
  CHECK(is_minimal(fixtures::fix_b()));
  CHECK(!is_minimal(fixtures::fix_c()));
  CHECK(is_topologically_transitive(fixtures::fix_b()));
  CHECK(!is_topologically_transitive(fixtures::fix_c()));
  CHECK(is_minimal(fixtures::fix_d()));

  // the empty action is vacuously minimal and transitive
  RawPartialAction raw;
  raw.groupoid = to_raw(fixtures::z2());
  raw.domain["e"] = {};
  raw.domain["g"] = {};
  const PartialAction empty = validate(raw);
  CHECK(is_minimal(empty));
  CHECK(is_topologically_transitive(empty));
}

TEST_CASE("fixed points") {
  const PartialAction b = fixtures::fix_b();
  CHECK(fixed_points(b, b.g.morphism_index("g")) == 0);
  CHECK(fixed_points(b, b.g.morphism_index("e")) == b.all_points());
  const PartialAction a = fixtures::fix_a();
  CHECK(fixed_points(a, a.g.morphism_index("g")) == a.all_points());
}

TEST_CASE("topological freeness") {
  const PartialAction a = fixtures::fix_a();
  const PartialAction b = fixtures::fix_b();
  CHECK(is_topologically_free_on(b, b.all_points()));
  CHECK(!is_topologically_free_on(a, a.all_points()));
  CHECK(is_topologically_free_on(a, 0));  // empty subset
  CHECK_THROWS_AS(static_cast<void>(is_topologically_free_on(a, with_bit(0, 5))),
                  ValidationError);
}

TEST_CASE("residual topological freeness") {
  CHECK(is_residually_topologically_free(fixtures::fix_c()));
  CHECK(!is_residually_topologically_free(fixtures::fix_a()));
  CHECK(is_residually_topologically_free(fixtures::fix_d()));
}

TEST_CASE("restriction") {
  const PartialAction c = fixtures::fix_c();
  const PartialAction r3 = restrict_to(c, mask_of(c, {"x3"}));
  CHECK(r3.num_points() == 1);
  CHECK(!is_global(r3));  // the non-unit acts nowhere on the fixed point

  const PartialAction r12 = restrict_to(c, mask_of(c, {"x1", "x2"}));
  CHECK(r12.num_points() == 2);
  CHECK(is_global(r12));  // the swap is global on its orbit
  CHECK(is_minimal(r12));

  CHECK(fingerprint(restrict_to(c, c.all_points())) == fingerprint(c));
  CHECK_THROWS_WITH_AS(static_cast<void>(restrict_to(c, mask_of(c, {"x1"}))),
                       doctest::Contains("not invariant"), ValidationError);
}

TEST_CASE("random instances are valid and deterministic") {
  ActionBounds bounds;
  bounds.max_points = 3;
  bounds.max_morphisms = 4;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const PartialAction a = random_instance(seed, bounds);
    CHECK(a.num_points() <= 3);
    CHECK(a.g.num_morphisms() <= 4);
    CHECK_NOTHROW(check_axioms(a));
    CHECK(fingerprint(random_instance(seed, bounds)) == fingerprint(a));
  }
}

TEST_CASE("random instance with zero points is the empty action") {
  ActionBounds bounds;
  bounds.max_points = 0;
  bounds.max_morphisms = 4;
  CHECK(random_instance(1, bounds).num_points() == 0);
}

TEST_CASE("random instances respect the dimension bound") {
  ActionBounds bounds;
  bounds.max_points = 4;
  bounds.max_morphisms = 6;
  bounds.max_skew_dim = 12;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PartialAction a = random_instance(seed, bounds);
    int dim = 0;
    for (Mask m : a.dom) dim += popcount(m);
    CHECK(dim <= 12);
  }
}
