#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/stone_dual.hpp"

using namespace sga;

TEST_CASE("idempotent counts") {
  const BooleanAlgebra b2 = idempotents(2, {"1", "2"});
  CHECK(b2.top() == 3);
  CHECK(b2.atoms() == 2);
  const BooleanAlgebra b1 = idempotents(1, {"1"});
  CHECK(b1.top() == 1);  // only 0 and 1
}

TEST_CASE("boolean operations satisfy de Morgan") {
  const BooleanAlgebra b = idempotents(3, {"1", "2", "3"});
  for (Mask e = 0; e <= b.top(); ++e)
    for (Mask f = 0; f <= b.top(); ++f) {
      CHECK(b.complement(b.join(e, f)) == b.meet(b.complement(e), b.complement(f)));
      CHECK(b.complement(b.meet(e, f)) == b.join(b.complement(e), b.complement(f)));
      CHECK(b.meet(e, b.complement(e)) == 0);
      CHECK(b.join(e, b.complement(e)) == b.top());
    }
}

TEST_CASE("upset operator") {
  const BooleanAlgebra b = idempotents(2, {"1", "2"});
  const auto up = b.upset({Mask{1}});
  CHECK(up == std::vector<Mask>{1, 3});
  // upset of a pair is the union of the individual upsets
  const auto up2 = b.upset({Mask{1}, Mask{2}});
  CHECK(up2 == std::vector<Mask>{1, 2, 3});
}

TEST_CASE("ultrafilters are principal at atoms") {
  const StoneDual x = ultrafilters(idempotents(2, {"1", "2"}));
  CHECK(x.points() == 2);
  CHECK(x.basic_set(x.algebra.top()) == x.algebra.top());  // Z_1 is everything
  const auto f0 = x.ultrafilter(0);
  for (Mask e : f0) CHECK(bit(e, 0));
  CHECK(f0.size() == 2);  // {atom0, top}
}

TEST_CASE("basic sets respect meets") {
  const StoneDual x = ultrafilters(idempotents(3, {"1", "2", "3"}));
  for (Mask e = 0; e <= x.algebra.top(); ++e)
    for (Mask f = 0; f <= x.algebra.top(); ++f)
      CHECK(x.basic_set(x.algebra.meet(e, f)) == (x.basic_set(e) & x.basic_set(f)));
}

TEST_CASE("algebraic presentation validates for the fixtures") {
  for (int p : {2, 3, 5, 7}) {
    for (const PartialAction& a :
         {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_c(), fixtures::fix_d()}) {
      const IdempotentAction t = algebraic_presentation(induced_action(a, p));
      CHECK_NOTHROW(validate_idempotent_action(t));
    }
  }
}

TEST_CASE("induced dual action recovers the original") {
  for (int p : {2, 3}) {
    for (const PartialAction& a :
         {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_c(), fixtures::fix_d()}) {
      const IdempotentAction t = algebraic_presentation(induced_action(a, p));
      const PartialAction back = induced_theta(t);
      CHECK(fingerprint(back) == fingerprint(a));
    }
  }
}

TEST_CASE("trivial algebraic action induces the trivial dual action") {
  // trivial groupoid acting on a three-point algebra
  RawPartialAction raw;
  raw.groupoid = to_raw(from_group({"e"}, {{0}}));
  raw.points = {{"y1", "e"}, {"y2", "e"}, {"y3", "e"}};
  raw.domain["e"] = {"y1", "y2", "y3"};
  raw.map["e"] = {{"y1", "y1"}, {"y2", "y2"}, {"y3", "y3"}};
  const PartialAction a = validate(raw);
  const IdempotentAction t = algebraic_presentation(induced_action(a, 2));
  const PartialAction back = induced_theta(t);
  CHECK(back.num_points() == 3);
  CHECK(is_global(back));
}

TEST_CASE("corrupted algebraic data is rejected") {
  IdempotentAction t = algebraic_presentation(induced_action(fixtures::fix_b(), 2));
  const int g = t.g.morphism_index("g");
  t.tau[g](0, 0) = 1;
  t.tau[g](0, 1) = 1;  // no longer sends a point mass to a point mass
  CHECK_THROWS_AS(validate_idempotent_action(t), ValidationError);
}

TEST_CASE("equivariance square commutes on the fixtures") {
  for (const PartialAction& a :
       {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_c(), fixtures::fix_d()}) {
    const IdempotentAction t = algebraic_presentation(induced_action(a, 2));
    for (const auto& c : check_equivariance(t)) {
      INFO(c.tag, " ", c.witness);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("full stone round trip report") {
  for (const PartialAction& a : {fixtures::fix_b(), fixtures::fix_c()}) {
    for (const auto& c : check_stone_round_trip(a, 2)) {
      INFO(c.tag, " ", c.witness);
      CHECK(c.ok());
    }
  }
}
