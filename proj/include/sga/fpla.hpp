#ifndef SGA_FPLA_HPP
#define SGA_FPLA_HPP

// Exact linear algebra over the prime fields F_p, p in {2,3,5,7}.
// Matrices are dense Eigen integer matrices with entries normalized to
// [0, p).  Subspaces are kept in reduced row echelon form, which makes
// equality of subspaces plain matrix equality.

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace sga {

using Mat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<int, 1, Eigen::Dynamic>;

bool is_supported_prime(int p);

/// Throws ValidationError unless p is one of the supported primes.
void require_prime(int p);

int mod_p(long long v, int p);
int inv_mod(int a, int p);

Mat reduced_mod(Mat m, int p);

/// Matrix product with entries reduced mod p.
Mat mul(const Mat& a, const Mat& b, int p);

/// Canonical reduced row echelon form: nonzero rows only, pivots equal to 1,
/// pivot columns cleared elsewhere, pivot columns strictly increasing.
Mat rref(Mat m, int p);

int rank_of(const Mat& m, int p);

/// Row space of a canonical (RREF) matrix contains v?
bool member(const Mat& basis, Vec v, int p);

/// Reduce v against a canonical basis; returns the residue.
Vec reduce_against(const Mat& basis, Vec v, int p);

Mat sum_spaces(const Mat& a, const Mat& b, int p);

/// Intersection of two row spaces (Zassenhaus).
Mat intersect_spaces(const Mat& a, const Mat& b, int p);

/// Left null space: canonical basis of { v : v * m = 0 }.
Mat left_null_space(const Mat& m, int p);

bool space_contains(const Mat& big, const Mat& small, int p);

/// A subspace of F_p^ambient with canonical basis.
struct Subspace {
  Mat basis;   // RREF, rows = dim, cols = ambient
  int ambient = 0;
  int p = 2;

  int dim() const { return static_cast<int>(basis.rows()); }
  bool is_zero() const { return basis.rows() == 0; }
  bool contains(const Vec& v) const { return member(basis, v, p); }
  bool contains(const Subspace& other) const { return space_contains(basis, other.basis, p); }
  bool operator==(const Subspace& other) const;
};

Subspace make_subspace(Mat rows, int ambient, int p);
Subspace zero_subspace(int ambient, int p);
Subspace full_space(int ambient, int p);

/// Deterministic total order: by dimension, then lexicographic entries.
bool subspace_less(const Subspace& a, const Subspace& b);

/// Compact fingerprint, usable as a set key.
std::string subspace_key(const Subspace& s);

} // namespace sga

#endif
