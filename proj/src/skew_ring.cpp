#include "sga/skew_ring.hpp"
#include "sga/errors.hpp"

namespace sga {

SkewRing make_skew_ring(InducedAction r) {
  SkewRing s{std::move(r), {}, {}, {}};
  const PartialAction& a = s.r.base;
  const int n = a.g.num_morphisms();
  const int nx = a.num_points();

  s.index = Eigen::MatrixXi::Constant(std::max(n, 1), std::max(nx, 1), -1);
  for (int g = 0; g < n; ++g)
    for (int x : bits_of(a.dom[g])) {
      s.index(g, x) = s.dim();
      s.basis.emplace_back(g, x);
    }

  // Monomial product table: 1_x d_g * 1_y d_h = 1_x d_{gh} exactly when
  // (g,h) is composable and y = theta_{g⁻¹}(x); zero otherwise.
  const int d = s.dim();
  s.prod = Eigen::MatrixXi::Constant(std::max(d, 1), std::max(d, 1), -1);
  for (int i = 0; i < d; ++i) {
    const auto [g, x] = s.basis[i];
    const int y = a.theta[a.g.inv[g]][x];
    for (int j = 0; j < d; ++j) {
      const auto [h, yy] = s.basis[j];
      if (!a.g.composable(g, h) || yy != y) continue;
      const int gh = a.g.comp(g, h);
      const int k = s.index(gh, x);
      if (k < 0)
        throw ValidationError("monomial product escapes the ring (support condition violated)");
      s.prod(i, j) = k;
    }
  }
  return s;
}

SkewElement from_dense(const SkewRing& s, const Vec& coords) {
  SkewElement e;
  for (int i = 0; i < s.dim(); ++i) {
    const int c = mod_p(coords(i), s.p());
    if (c == 0) continue;
    const auto [g, x] = s.basis[i];
    auto it = e.comp.find(g);
    if (it == e.comp.end()) it = e.comp.emplace(g, Vec::Zero(s.points())).first;
    it->second(x) = c;
  }
  return e;
}

Vec to_dense(const SkewRing& s, const SkewElement& e) {
  Vec v = Vec::Zero(s.dim());
  for (const auto& [g, f] : e.comp)
    for (Eigen::Index x = 0; x < f.cols(); ++x) {
      if (f(x) == 0) continue;
      const int i = s.basis_index(g, static_cast<int>(x));
      if (i < 0) throw ValidationError("element coefficient outside its domain ideal");
      v(i) = mod_p(f(x), s.p());
    }
  return v;
}

void check_element(const SkewRing& s, const SkewElement& e) { (void)to_dense(s, e); }

SkewElement add(const SkewRing& s, const SkewElement& a, const SkewElement& b) {
  Vec v = to_dense(s, a) + to_dense(s, b);
  return from_dense(s, v);
}

Vec multiply_dense(const SkewRing& s, const Vec& a, const Vec& b) {
  Vec out = Vec::Zero(s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < s.dim(); ++j) {
      if (b(j) == 0) continue;
      const int k = s.prod(i, j);
      if (k >= 0) out(k) = mod_p(out(k) + static_cast<long long>(a(i)) * b(j), s.p());
    }
  }
  return out;
}

SkewElement multiply(const SkewRing& s, const SkewElement& a, const SkewElement& b) {
  return from_dense(s, multiply_dense(s, to_dense(s, a), to_dense(s, b)));
}

SkewElement identity_element(const SkewRing& s) { return from_dense(s, identity_dense(s)); }

Vec identity_dense(const SkewRing& s) {
  Vec v = Vec::Zero(s.dim());
  for (int e = 0; e < s.r.base.g.num_objects(); ++e) {
    const int u = s.r.base.g.unit[e];
    for (int x : bits_of(s.r.base.dom[u])) v(s.basis_index(u, x)) = 1;
  }
  return v;
}

Vec unit_projection(const SkewRing& s, const SkewElement& e) {
  return unit_projection_dense(s, to_dense(s, e));
}

Vec unit_projection_dense(const SkewRing& s, const Vec& coords) {
  Vec f = Vec::Zero(s.points());
  for (int i = 0; i < s.dim(); ++i) {
    if (coords(i) == 0) continue;
    const auto [g, x] = s.basis[i];
    if (s.r.base.g.is_unit(g)) f(x) = mod_p(f(x) + coords(i), s.p());
  }
  return f;
}

SkewElement unit_embedding(const SkewRing& s, const Vec& f) {
  SkewElement e;
  for (int obj = 0; obj < s.r.base.g.num_objects(); ++obj) {
    const int u = s.r.base.g.unit[obj];
    Vec part = Vec::Zero(s.points());
    bool nonzero = false;
    for (int x : bits_of(s.r.base.block(obj))) {
      part(x) = mod_p(f(x), s.p());
      nonzero = nonzero || part(x) != 0;
    }
    if (nonzero) e.comp[u] = part;
  }
  return e;
}

SkewElement conditional_expectation(const SkewRing& s, const SkewElement& e) {
  return unit_embedding(s, unit_projection(s, e));
}

Vec coefficient_sum(const SkewRing& s, const SkewElement& e) {
  Vec f = Vec::Zero(s.points());
  for (const auto& [g, part] : e.comp)
    for (Eigen::Index x = 0; x < part.cols(); ++x) f(x) = mod_p(f(x) + part(x), s.p());
  return f;
}

Vec homogeneous_component(const SkewRing& s, const SkewElement& e, int g) {
  auto it = e.comp.find(g);
  if (it == e.comp.end()) return Vec::Zero(s.points());
  return it->second;
}

bool is_homogeneous(const SkewElement& e) { return e.comp.size() <= 1; }

Subspace unit_subring(const SkewRing& s) {
  std::vector<int> idx;
  for (int i = 0; i < s.dim(); ++i)
    if (s.r.base.g.is_unit(s.basis[i].first)) idx.push_back(i);
  Mat rows = Mat::Zero(static_cast<Eigen::Index>(idx.size()), s.dim());
  for (std::size_t k = 0; k < idx.size(); ++k) rows(static_cast<Eigen::Index>(k), idx[k]) = 1;
  return make_subspace(std::move(rows), s.dim(), s.p());
}

SkewQuotient make_quotient(const SkewRing& s, Mask u) {
  if (!is_invariant(s.r.base, u))
    throw ValidationError("quotient requires an invariant support subset");
  const Mask rest = s.r.base.all_points() & ~u;

  SkewQuotient q{make_skew_ring(induced_action(restrict_to(s.r.base, rest), s.p())),
                 make_skew_ring(induced_action(restrict_to(s.r.base, u), s.p())),
                 {},
                 {}};

  // Point indices change under restriction; translate via ids.
  auto point_in = [&](const SkewRing& t, int x_full) {
    return t.r.base.point_index(s.r.base.point_ids[x_full]);
  };

  q.projection = Mat::Zero(s.dim(), q.quotient.dim());
  for (int i = 0; i < s.dim(); ++i) {
    const auto [g, x] = s.basis[i];
    if (bit(u, x)) continue;
    q.projection(i, q.quotient.basis_index(g, point_in(q.quotient, x))) = 1;
  }
  q.embedding = Mat::Zero(q.kernel.dim(), s.dim());
  for (int i = 0; i < q.kernel.dim(); ++i) {
    const auto [g, x_k] = q.kernel.basis[i];
    const int x_full = s.r.base.point_index(q.kernel.r.base.point_ids[x_k]);
    q.embedding(i, s.basis_index(g, x_full)) = 1;
  }

  // Exactness: the projection is onto, the embedding is injective, the
  // composite vanishes, and rank-nullity matches dim(kernel ring).
  if (rank_of(q.projection, s.p()) != q.quotient.dim())
    throw ValidationError("quotient projection is not onto");
  if (rank_of(q.embedding, s.p()) != q.kernel.dim())
    throw ValidationError("kernel embedding is not injective");
  if (!mul(q.embedding, q.projection, s.p()).isZero())
    throw ValidationError("kernel embedding does not vanish under the projection");
  if (q.kernel.dim() + q.quotient.dim() != s.dim())
    throw ValidationError("quotient and kernel dimensions do not add up");
  {
    Mat ker = left_null_space(q.projection, s.p());
    Subspace k1 = make_subspace(std::move(ker), s.dim(), s.p());
    Subspace k2 = make_subspace(q.embedding, s.dim(), s.p());
    if (!(k1 == k2))
      throw ValidationError("kernel of the projection differs from the embedded ideal ring");
  }
  // Ring homomorphism property of the projection on monomial pairs.
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      Vec lhs = multiply_dense(q.quotient, q.projection.row(i), q.projection.row(j));
      const int k = s.prod(i, j);
      Vec rhs = k < 0 ? Vec::Zero(q.quotient.dim()) : Vec(q.projection.row(k));
      if (lhs != rhs) throw ValidationError("quotient projection is not multiplicative");
    }
  return q;
}

} // namespace sga
