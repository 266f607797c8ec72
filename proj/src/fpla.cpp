#include "sga/fpla.hpp"
#include "sga/errors.hpp"

#include <algorithm>

namespace sga {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

void require_prime(int p) {
  if (!is_supported_prime(p))
    throw ValidationError("unsupported field modulus " + std::to_string(p) +
                          " (supported: 2, 3, 5, 7)");
}

int mod_p(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

int inv_mod(int a, int p) {
  a = mod_p(a, p);
  if (a == 0) throw ValidationError("division by zero mod " + std::to_string(p));
  int result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result;
}

Mat reduced_mod(Mat m, int p) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = mod_p(m(i, j), p);
  return m;
}

Mat mul(const Mat& a, const Mat& b, int p) {
  Mat c = a * b;
  return reduced_mod(std::move(c), p);
}

Mat rref(Mat m, int p) {
  m = reduced_mod(std::move(m), p);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const int inv = inv_mod(m(r, c), p);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) = (m(r, j) * inv) % p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const int f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = mod_p(m(i, j) - static_cast<long long>(f) * m(r, j), p);
    }
    ++r;
  }
  return m.topRows(r).eval();
}

int rank_of(const Mat& m, int p) { return static_cast<int>(rref(m, p).rows()); }

Vec reduce_against(const Mat& basis, Vec v, int p) {
  v = reduced_mod(std::move(v), p);
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < basis.cols() && basis(i, c) == 0) ++c;
    if (c == basis.cols()) continue;
    const int f = v(c);  // pivot entry is 1
    if (f == 0) continue;
    for (Eigen::Index j = c; j < v.cols(); ++j)
      v(j) = mod_p(v(j) - static_cast<long long>(f) * basis(i, j), p);
  }
  return v;
}

bool member(const Mat& basis, Vec v, int p) {
  return reduce_against(basis, std::move(v), p).isZero();
}

Mat sum_spaces(const Mat& a, const Mat& b, int p) {
  if (a.rows() == 0) return rref(b, p);
  if (b.rows() == 0) return rref(a, p);
  Mat stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  return rref(std::move(stacked), p);
}

Mat intersect_spaces(const Mat& a, const Mat& b, int p) {
  const Eigen::Index n = std::max(a.cols(), b.cols());
  if (a.rows() == 0 || b.rows() == 0) return Mat(0, n);
  Mat z = Mat::Zero(a.rows() + b.rows(), 2 * n);
  z.block(0, 0, a.rows(), n) = a;
  z.block(0, n, a.rows(), n) = a;
  z.block(a.rows(), 0, b.rows(), n) = b;
  Mat r = rref(std::move(z), p);
  Mat out(r.rows(), n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    if (!r.row(i).head(n).isZero()) continue;
    out.row(k++) = r.row(i).tail(n);
  }
  return rref(out.topRows(k), p);
}

Mat left_null_space(const Mat& m, int p) {
  // v * m == 0  <=>  m^T v^T == 0
  const Eigen::Index dim = m.rows();
  Mat r = rref(m.transpose(), p);
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(dim, false);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    Eigen::Index c = 0;
    while (c < r.cols() && r(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  Mat out(dim - r.rows(), dim);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Vec v = Vec::Zero(dim);
    v(f) = 1;
    for (Eigen::Index i = 0; i < r.rows(); ++i) v(pivot_col[i]) = mod_p(-r(i, f), p);
    out.row(k++) = v;
  }
  return rref(out.topRows(k), p);
}

bool space_contains(const Mat& big, const Mat& small, int p) {
  for (Eigen::Index i = 0; i < small.rows(); ++i)
    if (!member(big, small.row(i), p)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient == other.ambient && p == other.p && basis.rows() == other.basis.rows() &&
         (basis.rows() == 0 || basis == other.basis);
}

Subspace make_subspace(Mat rows, int ambient, int p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  if (rows.rows() == 0)
    s.basis = Mat(0, ambient);
  else
    s.basis = rref(std::move(rows), p);
  return s;
}

Subspace zero_subspace(int ambient, int p) { return make_subspace(Mat(0, ambient), ambient, p); }

Subspace full_space(int ambient, int p) {
  return make_subspace(Mat::Identity(ambient, ambient), ambient, p);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (Eigen::Index i = 0; i < a.basis.rows(); ++i)
    for (Eigen::Index j = 0; j < a.basis.cols(); ++j) {
      if (a.basis(i, j) != b.basis(i, j)) return a.basis(i, j) < b.basis(i, j);
    }
  return false;
}

std::string subspace_key(const Subspace& s) {
  std::string key;
  key.reserve(static_cast<std::size_t>(s.basis.size()) + 8);
  key += std::to_string(s.dim());
  key += ':';
  for (Eigen::Index i = 0; i < s.basis.rows(); ++i)
    for (Eigen::Index j = 0; j < s.basis.cols(); ++j) key += static_cast<char>('0' + s.basis(i, j));
  return key;
}

} // namespace sga
