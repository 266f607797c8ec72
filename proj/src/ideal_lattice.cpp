#include "sga/ideal_lattice.hpp"
#include "sga/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

namespace sga {

int default_dim_cap(int p) {
  switch (p) {
    case 2: return 14;
    case 3: return 9;
    default: return 6;
  }
}

int effective_dim_cap(int p) {
  if (const char* env = std::getenv("SGA_MAX_DIM")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_dim_cap(p);
}

namespace {

// Incremental echelon container: rows kept reduced, pivots tracked.
struct Echelon {
  Mat rows;                 // r x dim, forward-reduced with unit pivots
  std::vector<int> pivots;  // pivot column per row
  int dim;
  int p;

  explicit Echelon(int dim_, int p_) : rows(0, dim_), dim(dim_), p(p_) {}

  int rank() const { return static_cast<int>(rows.rows()); }

  // Reduce v; if nonzero, insert and return true.
  bool insert(Vec v) {
    for (int i = 0; i < rank(); ++i) {
      const int c = pivots[i];
      const int f = v(c);
      if (f == 0) continue;
      for (int j = 0; j < dim; ++j)
        v(j) = mod_p(v(j) - static_cast<long long>(f) * rows(i, j), p);
    }
    int c = 0;
    while (c < dim && v(c) == 0) ++c;
    if (c == dim) return false;
    const int inv = inv_mod(v(c), p);
    for (int j = c; j < dim; ++j) v(j) = (v(j) * inv) % p;
    rows.conservativeResize(rank() + 1, dim);
    rows.row(rank() - 1) = v;
    pivots.push_back(c);
    return true;
  }
};

} // namespace

Subspace ideal_closure(const SkewRing& s, const Mat& gens) {
  const int d = s.dim();
  Echelon ech(d, s.p());
  std::vector<Vec> queue;
  for (Eigen::Index i = 0; i < gens.rows(); ++i) {
    Vec v = reduced_mod(gens.row(i), s.p());
    if (ech.insert(v)) queue.push_back(ech.rows.row(ech.rank() - 1));
  }
  while (!queue.empty()) {
    const Vec v = queue.back();
    queue.pop_back();
    for (int t = 0; t < d; ++t) {
      // left product m_t * v and right product v * m_t
      Vec left = Vec::Zero(d), right = Vec::Zero(d);
      for (int j = 0; j < d; ++j) {
        if (v(j) == 0) continue;
        const int kl = s.prod(t, j);
        if (kl >= 0) left(kl) = mod_p(left(kl) + v(j), s.p());
        const int kr = s.prod(j, t);
        if (kr >= 0) right(kr) = mod_p(right(kr) + v(j), s.p());
      }
      if (ech.insert(left)) queue.push_back(ech.rows.row(ech.rank() - 1));
      if (ech.insert(right)) queue.push_back(ech.rows.row(ech.rank() - 1));
    }
  }
  return make_subspace(ech.rows, d, s.p());
}

Ideal ideal_generated_by(const SkewRing& s, const std::vector<SkewElement>& gens) {
  Mat rows(static_cast<Eigen::Index>(gens.size()), s.dim());
  for (std::size_t i = 0; i < gens.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) = to_dense(s, gens[i]);
  return Ideal{ideal_closure(s, rows)};
}

IdealLattice all_ideals(const SkewRing& s, int dim_cap, int lattice_cap) {
  const int d = s.dim();
  if (d > dim_cap)
    throw CapExceeded("skew ring dimension " + std::to_string(d) +
                      " exceeds the ideal enumeration cap " + std::to_string(dim_cap));
  const int p = s.p();

  std::set<std::string> seen;
  std::vector<Subspace> spaces;
  auto add = [&](Subspace sp) {
    const std::string key = subspace_key(sp);
    if (seen.insert(key).second) {
      spaces.push_back(std::move(sp));
      if (static_cast<int>(spaces.size()) > lattice_cap)
        throw CapExceeded("ideal lattice exceeds " + std::to_string(lattice_cap) + " entries");
      return true;
    }
    return false;
  };

  add(zero_subspace(d, p));

  // Principal ideals of every nonzero coefficient vector.
  std::vector<int> digits(static_cast<std::size_t>(d), 0);
  long long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= p;
    if (total > (1ll << 62)) throw CapExceeded("enumeration space too large");
  }
  Vec v = Vec::Zero(d);
  for (long long code = 1; code < total; ++code) {
    int carry = 0;
    digits[0] += 1;
    while (digits[carry] == p) {
      digits[carry] = 0;
      digits[++carry] += 1;
    }
    for (int i = 0; i < d; ++i) v(i) = digits[static_cast<std::size_t>(i)];
    Mat one(1, d);
    one.row(0) = v;
    add(ideal_closure(s, one));
  }

  // Close under pairwise joins.
  std::size_t frontier_start = 0;
  while (frontier_start < spaces.size()) {
    const std::size_t frontier_end = spaces.size();
    for (std::size_t i = frontier_start; i < frontier_end; ++i)
      for (std::size_t j = 0; j < frontier_end; ++j) {
        if (i == j) continue;
        Mat sum = sum_spaces(spaces[i].basis, spaces[j].basis, p);
        add(make_subspace(std::move(sum), d, p));
      }
    frontier_start = frontier_end;
  }

  IdealLattice lat;
  for (auto& sp : spaces) lat.ideals.push_back(Ideal{std::move(sp)});
  std::sort(lat.ideals.begin(), lat.ideals.end(),
            [](const Ideal& a, const Ideal& b) { return subspace_less(a.space, b.space); });
  return lat;
}

bool is_graded_ideal(const SkewRing& s, const Subspace& ideal) {
  for (Eigen::Index i = 0; i < ideal.basis.rows(); ++i) {
    const SkewElement e = from_dense(s, ideal.basis.row(i));
    for (const auto& [g, part] : e.comp) {
      SkewElement mono;
      mono.comp[g] = part;
      if (!ideal.contains(to_dense(s, mono))) return false;
    }
  }
  return true;
}

Mask invariant_support_of_ideal(const SkewRing& s, const Subspace& ideal) {
  const Subspace a = unit_subring(s);
  const Mat inter = intersect_spaces(ideal.basis, a.basis, s.p());
  Mask u = 0;
  for (Eigen::Index i = 0; i < inter.rows(); ++i)
    u |= support_of(unit_projection_dense(s, inter.row(i)));
  return u;
}

Mask unit_projection_support(const SkewRing& s, const Subspace& ideal) {
  Mask u = 0;
  for (Eigen::Index i = 0; i < ideal.basis.rows(); ++i)
    u |= support_of(unit_projection_dense(s, ideal.basis.row(i)));
  return u;
}

Ideal graded_ideal_from_subset(const SkewRing& s, Mask u) {
  if (!is_invariant(s.r.base, u))
    throw ValidationError("graded ideal requires an invariant subset");
  std::vector<int> idx;
  for (int i = 0; i < s.dim(); ++i)
    if (bit(u, s.basis[i].second)) idx.push_back(i);
  Mat rows = Mat::Zero(static_cast<Eigen::Index>(idx.size()), s.dim());
  for (std::size_t k = 0; k < idx.size(); ++k) rows(static_cast<Eigen::Index>(k), idx[k]) = 1;
  return Ideal{make_subspace(std::move(rows), s.dim(), s.p())};
}

Ideal ideal_product(const SkewRing& s, const Ideal& a, const Ideal& b) {
  const Eigen::Index ra = a.space.basis.rows(), rb = b.space.basis.rows();
  Mat rows(ra * rb, s.dim());
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < rb; ++j)
      rows.row(i * rb + j) = multiply_dense(s, a.space.basis.row(i), b.space.basis.row(j));
  return Ideal{ideal_closure(s, rows)};
}

bool has_intersection_property(const SkewRing& s, const IdealLattice& lattice) {
  const Subspace a = unit_subring(s);
  for (const Ideal& ideal : lattice.ideals) {
    if (ideal.dim() == 0) continue;
    if (intersect_spaces(ideal.space.basis, a.basis, s.p()).rows() == 0) return false;
  }
  return true;
}

bool has_residual_intersection_property(const SkewRing& s, int dim_cap) {
  for (Mask u : invariant_subsets(s.r.base)) {
    const SkewQuotient q = make_quotient(s, u);
    const IdealLattice lat = all_ideals(q.quotient, dim_cap);
    if (!has_intersection_property(q.quotient, lat)) return false;
  }
  return true;
}

bool is_simple(const IdealLattice& lattice) { return lattice.size() <= 2; }

bool is_prime(const SkewRing& s, const IdealLattice& lattice) {
  // It suffices to test atoms: if I*J = 0 with I, J nonzero, shrinking to
  // minimal nonzero subideals preserves the vanishing product.
  std::vector<const Ideal*> atoms;
  for (const Ideal& i : lattice.ideals) {
    if (i.dim() == 0) continue;
    bool minimal = true;
    for (const Ideal& j : lattice.ideals) {
      if (j.dim() == 0 || j.dim() >= i.dim()) continue;
      if (i.space.contains(j.space)) { minimal = false; break; }
    }
    if (minimal) atoms.push_back(&i);
  }
  for (const Ideal* i : atoms)
    for (const Ideal* j : atoms)
      if (ideal_product(s, *i, *j).dim() == 0) return false;
  return true;
}

bool is_graded_simple(const SkewRing& s) {
  const auto inv = invariant_subsets(s.r.base);
  std::set<std::string> distinct;
  for (Mask u : inv) distinct.insert(subspace_key(graded_ideal_from_subset(s, u).space));
  return distinct.size() <= 2;
}

bool is_graded_prime(const SkewRing& s) {
  const auto inv = invariant_subsets(s.r.base);
  std::vector<Ideal> graded;
  for (Mask u : inv) graded.push_back(graded_ideal_from_subset(s, u));
  for (std::size_t i = 0; i < graded.size(); ++i)
    for (std::size_t j = i; j < graded.size(); ++j) {
      if (graded[i].dim() == 0 || graded[j].dim() == 0) continue;
      if (ideal_product(s, graded[i], graded[j]).dim() == 0 ||
          ideal_product(s, graded[j], graded[i]).dim() == 0)
        return false;
    }
  return true;
}

Subspace centralizer_of_units(const SkewRing& s) {
  const int d = s.dim();
  std::vector<int> unit_monomials;
  for (int i = 0; i < d; ++i)
    if (s.r.base.g.is_unit(s.basis[i].first)) unit_monomials.push_back(i);
  if (d == 0) return zero_subspace(0, s.p());

  // Constraint matrix: v * (L_m - R_m) = 0 for each unit monomial m, where
  // L_m, R_m are the matrices of left and right multiplication by m.
  Mat big = Mat::Zero(d, d * static_cast<Eigen::Index>(unit_monomials.size()));
  for (std::size_t k = 0; k < unit_monomials.size(); ++k) {
    const int m = unit_monomials[k];
    for (int j = 0; j < d; ++j) {
      const int kl = s.prod(m, j);  // m * e_j
      if (kl >= 0)
        big(j, static_cast<Eigen::Index>(k) * d + kl) =
            mod_p(big(j, static_cast<Eigen::Index>(k) * d + kl) + 1, s.p());
      const int kr = s.prod(j, m);  // e_j * m
      if (kr >= 0)
        big(j, static_cast<Eigen::Index>(k) * d + kr) =
            mod_p(big(j, static_cast<Eigen::Index>(k) * d + kr) - 1, s.p());
    }
  }
  return make_subspace(left_null_space(big, s.p()), d, s.p());
}

bool is_unit_subring_maximal_commutative(const SkewRing& s) {
  return centralizer_of_units(s) == unit_subring(s);
}

} // namespace sga
