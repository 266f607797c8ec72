#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/fn_algebra.hpp"

using namespace sga;

TEST_CASE("induced action applies coordinate permutations") {
  const InducedAction r = induced_action(fixtures::fix_b(), 2);
  const int g = r.base.g.morphism_index("g");
  Vec f(2);
  f << 1, 0;
  Vec swapped(2);
  swapped << 0, 1;
  CHECK(r.apply(g, f) == swapped);
  CHECK(r.domain_identity(g) == Vec::Ones(2));
}

TEST_CASE("induced action on the partial swap") {
  const InducedAction r = induced_action(fixtures::fix_c(), 2);
  const int g = r.base.g.morphism_index("g");
  CHECK(popcount(r.base.dom[g]) == 2);
  Vec f = Vec::Zero(3);
  f(r.base.point_index("x1")) = 1;
  const Vec img = r.apply(g, f);
  CHECK(support_of(img) == with_bit(Mask{0}, r.base.point_index("x2")));
}

TEST_CASE("one-point trivial action gives the base field") {
  const InducedAction r = induced_action(fixtures::fix_a(), 5);
  CHECK(r.dim() == 1);
  Vec f(1);
  f << 3;
  CHECK(r.apply(r.base.g.morphism_index("g"), f) == f);
}

TEST_CASE("subset ideal dictionary round trips") {
  const InducedAction r = induced_action(fixtures::fix_c(), 2);
  for (Mask u = 0; u < (Mask{1} << 3); ++u) {
    const Subspace j = ideal_from_open(r, u);
    CHECK(j.dim() == popcount(u));
    CHECK(support_of_ideal(r, j) == u);
  }
  CHECK(support_of_ideal(r, full_space(3, 2)) == r.base.all_points());
}

TEST_CASE("non-ideal subspaces are rejected by the support map") {
  const InducedAction r = induced_action(fixtures::fix_c(), 2);
  Mat rows(1, 3);
  rows << 1, 1, 0;  // spans no coordinate ideal
  CHECK_THROWS_WITH_AS(static_cast<void>(support_of_ideal(r, make_subspace(rows, 3, 2))),
                       doctest::Contains("not an ideal"), ValidationError);
}

TEST_CASE("G-simplicity and G-primeness") {
  CHECK(is_G_simple(induced_action(fixtures::fix_b(), 2)));
  CHECK(is_G_prime(induced_action(fixtures::fix_b(), 2)));
  CHECK(is_G_simple(induced_action(fixtures::fix_a(), 2)));
  CHECK(!is_G_simple(induced_action(fixtures::fix_c(), 2)));
  CHECK(!is_G_prime(induced_action(fixtures::fix_c(), 2)));
  CHECK(is_G_simple(induced_action(fixtures::fix_d(), 2)));
}

TEST_CASE("quotient actions") {
  const PartialAction c = fixtures::fix_c();
  const InducedAction r = induced_action(c, 2);
  const Mask x3 = with_bit(Mask{0}, c.point_index("x3"));

  // quotient by the ideal supported on {x3} leaves the swap
  const InducedAction q = quotient_action(r, x3);
  CHECK(q.dim() == 2);
  CHECK(is_G_simple(q));

  // quotient by zero is the action itself
  CHECK(quotient_action(r, 0).dim() == 3);
  // quotient by everything is the zero algebra
  CHECK(quotient_action(r, c.all_points()).dim() == 0);

  CHECK_THROWS_AS(static_cast<void>(quotient_action(r, with_bit(Mask{0}, c.point_index("x1")))),
                  ValidationError);
}

TEST_CASE("unsupported field modulus") {
  CHECK_THROWS_AS(static_cast<void>(induced_action(fixtures::fix_b(), 6)), ValidationError);
}
