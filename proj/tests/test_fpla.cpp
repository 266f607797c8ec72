#include "doctest.h"

#include "sga/errors.hpp"
#include "sga/fpla.hpp"

#include <random>

using namespace sga;

namespace {

Mat random_mat(std::mt19937_64& rng, int rows, int cols, int p) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = static_cast<int>(rng() % static_cast<unsigned>(p));
  return m;
}

} // namespace

TEST_CASE("rref canonical form") {
  Mat m(3, 4);
  m << 1, 1, 0, 1,
       0, 1, 1, 0,
       1, 0, 1, 1;
  const Mat r = rref(m, 2);
  CHECK(r.rows() == 2);
  // pivots strictly increasing, pivot entries 1, pivot columns cleared
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 1) == 1);
  CHECK(r(0, 1) == 0);
  // rref is idempotent
  CHECK(rref(r, 2) == r);
}

TEST_CASE("rref over odd primes normalizes pivots") {
  Mat m(2, 3);
  m << 2, 1, 0,
       0, 0, 3;
  const Mat r = rref(m, 5);
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 2) == 1);
}

TEST_CASE("membership and reduction") {
  Mat m(2, 3);
  m << 1, 0, 1,
       0, 1, 1;
  const Mat r = rref(m, 2);
  Vec in(3), out(3);
  in << 1, 1, 0;
  out << 1, 1, 1;
  CHECK(member(r, in, 2));
  CHECK(!member(r, out, 2));
}

TEST_CASE("sum and intersection dimensions") {
  std::mt19937_64 rng(42);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 6;
      const Mat a = rref(random_mat(rng, 3, n, p), p);
      const Mat b = rref(random_mat(rng, 3, n, p), p);
      const Mat s = sum_spaces(a, b, p);
      const Mat i = intersect_spaces(a, b, p);
      CHECK(a.rows() + b.rows() == s.rows() + i.rows());
      // intersection members lie in both row spaces
      for (Eigen::Index r = 0; r < i.rows(); ++r) {
        CHECK(member(a, i.row(r), p));
        CHECK(member(b, i.row(r), p));
      }
      // common vectors land in the intersection
      for (Eigen::Index r = 0; r < a.rows(); ++r)
        if (member(b, a.row(r), p)) CHECK(member(i, a.row(r), p));
    }
  }
}

TEST_CASE("left null space annihilates") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Mat m = random_mat(rng, 5, 4, p);
      const Mat k = left_null_space(m, p);
      CHECK(k.rows() + rank_of(m, p) == 5);
      if (k.rows() > 0) CHECK(mul(k, m, p).isZero());
    }
  }
}

TEST_CASE("subspace equality is canonical") {
  Mat a(2, 3), b(2, 3);
  a << 1, 0, 1,
       0, 1, 1;
  b << 1, 1, 0,
       0, 1, 1;
  const Subspace sa = make_subspace(a, 3, 2);
  const Subspace sb = make_subspace(b, 3, 2);
  CHECK(sa == sb);  // same row space, different presentations
  CHECK(subspace_key(sa) == subspace_key(sb));
}

TEST_CASE("unsupported modulus is rejected") {
  CHECK_THROWS_AS(require_prime(4), ValidationError);
  CHECK_THROWS_AS(require_prime(11), ValidationError);
  CHECK_NOTHROW(require_prime(7));
}
