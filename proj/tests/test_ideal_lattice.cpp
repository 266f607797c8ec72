#include "doctest.h"

#include "fixtures.hpp"
#include "sga/errors.hpp"
#include "sga/ideal_lattice.hpp"

#include <set>

using namespace sga;

namespace {

SkewRing ring_of(const PartialAction& a, int p = 2) { return make_skew_ring(a, p); }

// Oracle: a subspace is a two-sided ideal iff it is closed under one-sided
// multiplication by every monomial.
bool oracle_is_ideal(const SkewRing& s, const Subspace& sp) {
  for (Eigen::Index r = 0; r < sp.basis.rows(); ++r)
    for (int t = 0; t < s.dim(); ++t) {
      Vec unit = Vec::Zero(s.dim());
      unit(t) = 1;
      if (!sp.contains(multiply_dense(s, unit, sp.basis.row(r)))) return false;
      if (!sp.contains(multiply_dense(s, sp.basis.row(r), unit))) return false;
    }
  return true;
}

// Brute-force ideal enumeration for dim <= 4: spans of all 4-tuples of
// vectors, filtered by the closure oracle.
std::vector<std::string> oracle_all_ideals(const SkewRing& s) {
  const int d = s.dim();
  REQUIRE(d <= 4);
  const int p = s.p();
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  std::vector<Vec> vectors;
  for (long long code = 0; code < total; ++code) {
    Vec v = Vec::Zero(d);
    long long c = code;
    for (int i = 0; i < d; ++i) {
      v(i) = static_cast<int>(c % p);
      c /= p;
    }
    vectors.push_back(v);
  }
  std::set<std::string> keys;
  const std::size_t nv = vectors.size();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i; j < nv; ++j)
      for (std::size_t k = j; k < nv; ++k)
        for (std::size_t l = k; l < nv; ++l) {
          Mat rows(4, d);
          rows.row(0) = vectors[i];
          rows.row(1) = vectors[j];
          rows.row(2) = vectors[k];
          rows.row(3) = vectors[l];
          const Subspace sp = make_subspace(rows, d, p);
          if (oracle_is_ideal(s, sp)) keys.insert(subspace_key(sp));
        }
  return {keys.begin(), keys.end()};
}

} // namespace

TEST_CASE("fixture ideal counts over F2") {
  CHECK(all_ideals(ring_of(fixtures::fix_a()), 14).size() == 3);
  CHECK(all_ideals(ring_of(fixtures::fix_b()), 14).size() == 2);
  CHECK(all_ideals(ring_of(fixtures::fix_c()), 14).size() == 4);
  CHECK(all_ideals(ring_of(fixtures::fix_d()), 14).size() == 2);
}

TEST_CASE("enumeration agrees with the spanning-set oracle on tiny rings") {
  for (const PartialAction& a : {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_d()}) {
    const SkewRing s = ring_of(a);
    if (s.dim() > 4) continue;
    const IdealLattice lat = all_ideals(s, 14);
    std::vector<std::string> got;
    for (const auto& i : lat.ideals) got.push_back(subspace_key(i.space));
    std::sort(got.begin(), got.end());
    CHECK(got == oracle_all_ideals(s));
  }
}

TEST_CASE("every enumerated ideal passes the closure oracle") {
  for (const PartialAction& a : {fixtures::fix_a(), fixtures::fix_c(), fixtures::fix_d()}) {
    const SkewRing s = ring_of(a);
    for (const auto& i : all_ideals(s, 14).ideals) CHECK(oracle_is_ideal(s, i.space));
  }
}

TEST_CASE("ideal closure examples") {
  const SkewRing s = ring_of(fixtures::fix_a());
  CHECK(ideal_generated_by(s, {identity_element(s)}).dim() == s.dim());
  Mat rows(1, s.dim());
  rows.row(0) = Vec::Ones(s.dim());
  CHECK(ideal_closure(s, rows).dim() == 1);
  CHECK(ideal_generated_by(s, {}).dim() == 0);
}

TEST_CASE("gradedness of ideals") {
  const SkewRing sa = ring_of(fixtures::fix_a());
  int graded = 0;
  for (const auto& i : all_ideals(sa, 14).ideals) graded += is_graded_ideal(sa, i.space);
  CHECK(graded == 2);  // zero and the whole ring only

  const SkewRing sc = ring_of(fixtures::fix_c());
  for (const auto& i : all_ideals(sc, 14).ideals) CHECK(is_graded_ideal(sc, i.space));
}

TEST_CASE("support correspondence on the partial swap") {
  const PartialAction a = fixtures::fix_c();
  const SkewRing s = ring_of(a);
  const Mask x3 = with_bit(0, a.point_index("x3"));
  const Ideal psi = graded_ideal_from_subset(s, x3);
  CHECK(psi.dim() == 1);
  CHECK(is_graded_ideal(s, psi.space));
  CHECK(invariant_support_of_ideal(s, psi.space) == x3);

  for (const auto& i : all_ideals(s, 14).ideals) {
    if (!is_graded_ideal(s, i.space)) continue;
    const Mask u = invariant_support_of_ideal(s, i.space);
    CHECK(graded_ideal_from_subset(s, u).space == i.space);
  }
}

TEST_CASE("unit part of the augmentation-style ideal is zero") {
  const SkewRing s = ring_of(fixtures::fix_a());
  Mat rows(1, s.dim());
  rows.row(0) = Vec::Ones(s.dim());
  const Subspace mid = ideal_closure(s, rows);
  CHECK(invariant_support_of_ideal(s, mid) == 0);
}

TEST_CASE("intersection property per fixture") {
  auto has_ip = [](const PartialAction& a) {
    const SkewRing s = ring_of(a);
    return has_intersection_property(s, all_ideals(s, 14));
  };
  CHECK(!has_ip(fixtures::fix_a()));
  CHECK(has_ip(fixtures::fix_b()));
  CHECK(has_ip(fixtures::fix_c()));
}

TEST_CASE("residual intersection property per fixture") {
  CHECK(!has_residual_intersection_property(ring_of(fixtures::fix_a()), 14));
  CHECK(has_residual_intersection_property(ring_of(fixtures::fix_b()), 14));
  CHECK(has_residual_intersection_property(ring_of(fixtures::fix_c()), 14));
}

TEST_CASE("simplicity and primeness per fixture") {
  const SkewRing sa = ring_of(fixtures::fix_a());
  const IdealLattice la = all_ideals(sa, 14);
  CHECK(!is_simple(la));
  // the middle ideal squares to zero over F2, so the group algebra is not prime
  CHECK(!is_prime(sa, la));
  CHECK(is_graded_simple(sa));
  CHECK(is_graded_prime(sa));

  const SkewRing sb = ring_of(fixtures::fix_b());
  const IdealLattice lb = all_ideals(sb, 14);
  CHECK(is_simple(lb));
  CHECK(is_prime(sb, lb));

  const SkewRing sc = ring_of(fixtures::fix_c());
  const IdealLattice lc = all_ideals(sc, 14);
  CHECK(!is_simple(lc));
  CHECK(!is_prime(sc, lc));  // the blocks {x3} and {x1,x2} annihilate
  CHECK(!is_graded_simple(sc));
  CHECK(!is_graded_prime(sc));
}

TEST_CASE("middle ideal of the group algebra squares to zero") {
  const SkewRing s = ring_of(fixtures::fix_a());
  const IdealLattice lat = all_ideals(s, 14);
  REQUIRE(lat.size() == 3);
  const Ideal& mid = lat.ideals[1];
  REQUIRE(mid.dim() == 1);
  CHECK(ideal_product(s, mid, mid).dim() == 0);
}

TEST_CASE("centralizer of the unit subring") {
  // commutative group algebra: the centralizer is everything
  const SkewRing sa = ring_of(fixtures::fix_a());
  CHECK(centralizer_of_units(sa).dim() == sa.dim());
  CHECK(!is_unit_subring_maximal_commutative(sa));

  // two-by-two matrix picture: the diagonal is maximal commutative
  const SkewRing sb = ring_of(fixtures::fix_b());
  CHECK(centralizer_of_units(sb) == unit_subring(sb));
  CHECK(is_unit_subring_maximal_commutative(sb));

  CHECK(is_unit_subring_maximal_commutative(ring_of(fixtures::fix_c())));
}

TEST_CASE("dimension cap reported") {
  const SkewRing s = ring_of(fixtures::fix_c());
  CHECK_THROWS_AS(static_cast<void>(all_ideals(s, 3)), CapExceeded);
}

TEST_CASE("default caps per field") {
  CHECK(default_dim_cap(2) == 14);
  CHECK(default_dim_cap(3) == 9);
  CHECK(default_dim_cap(5) == 6);
  CHECK(default_dim_cap(7) == 6);
}
