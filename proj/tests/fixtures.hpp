#ifndef SGA_TESTS_FIXTURES_HPP
#define SGA_TESTS_FIXTURES_HPP

// Shared fixtures.
//   fix_a: the two-element group acting trivially on one point.
//   fix_b: the two-element group swapping two points (a global action).
//   fix_c: the swap on {x1, x2} with a third untouched point; genuinely
//          partial, with domains {x1, x2} for the non-unit.
//   fix_d: the pair groupoid on two objects moving a to b.
//   fix_u1/u2/u3: the standard small ultragraphs for Condition (K).

#include "sga/partial_action.hpp"
#include "sga/ultragraph.hpp"

namespace sga::fixtures {

inline Groupoid z2() {
  return from_group({"e", "g"}, {{0, 1}, {1, 0}});
}

inline Groupoid z3() {
  return from_group({"e", "g", "h"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

inline PartialAction fix_a() {
  RawPartialAction raw;
  raw.groupoid = to_raw(z2());
  raw.points = {{"x1", "e"}};
  raw.domain["e"] = {"x1"};
  raw.domain["g"] = {"x1"};
  raw.map["e"] = {{"x1", "x1"}};
  raw.map["g"] = {{"x1", "x1"}};
  return validate(raw);
}

inline PartialAction fix_b() {
  RawPartialAction raw;
  raw.groupoid = to_raw(z2());
  raw.points = {{"x1", "e"}, {"x2", "e"}};
  raw.domain["e"] = {"x1", "x2"};
  raw.domain["g"] = {"x1", "x2"};
  raw.map["e"] = {{"x1", "x1"}, {"x2", "x2"}};
  raw.map["g"] = {{"x1", "x2"}, {"x2", "x1"}};
  return validate(raw);
}

inline PartialAction fix_c() {
  RawPartialAction raw;
  raw.groupoid = to_raw(z2());
  raw.points = {{"x1", "e"}, {"x2", "e"}, {"x3", "e"}};
  raw.domain["e"] = {"x1", "x2", "x3"};
  raw.domain["g"] = {"x1", "x2"};
  raw.map["e"] = {{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}};
  raw.map["g"] = {{"x1", "x2"}, {"x2", "x1"}};
  return validate(raw);
}

inline PartialAction fix_d() {
  const Groupoid pg = pair_groupoid(2);
  RawPartialAction raw;
  raw.groupoid = to_raw(pg);
  raw.points = {{"a", "o0"}, {"b", "o1"}};
  raw.domain["p00"] = {"a"};
  raw.domain["p11"] = {"b"};
  raw.domain["p10"] = {"b"};  // arrow o0 -> o1 lands in the block of o1
  raw.domain["p01"] = {"a"};
  raw.map["p00"] = {{"a", "a"}};
  raw.map["p11"] = {{"b", "b"}};
  raw.map["p10"] = {{"a", "b"}};
  raw.map["p01"] = {{"b", "a"}};
  return validate(raw);
}

inline Ultragraph fix_u1() {
  RawUltragraph raw;
  raw.vertices = {"v"};
  raw.edges = {{"e", "v", {"v"}}};
  return validate(raw);
}

inline Ultragraph fix_u2() {
  RawUltragraph raw;
  raw.vertices = {"v"};
  raw.edges = {{"e", "v", {"v"}}, {"f", "v", {"v"}}};
  return validate(raw);
}

inline Ultragraph fix_u3() {
  RawUltragraph raw;
  raw.vertices = {"v", "w"};
  raw.edges = {{"e", "v", {"v", "w"}}, {"f", "w", {"v"}}};
  return validate(raw);
}

} // namespace sga::fixtures

#endif
