#include "sga/verifier.hpp"
#include "sga/corpus.hpp"
#include "sga/errors.hpp"
#include "sga/fn_algebra.hpp"
#include "sga/ideal_lattice.hpp"
#include "sga/skew_ring.hpp"
#include "sga/stone_dual.hpp"
#include "sga/trans_groupoid.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

namespace sga {

SuiteSelection SuiteSelection::parse(const std::string& name) {
  SuiteSelection s;
  if (name == "all") return all();
  if (name == "dynamics") s.dynamics = true;
  else if (name == "ideal") s.ideal = true;
  else if (name == "steinberg") s.steinberg = true;
  else if (name == "stone") s.stone = true;
  else if (name == "ultragraph") { /* handled by instance kind */ }
  else throw ValidationError("unknown suite '" + name + "'");
  return s;
}

namespace {

// Everything expensive, computed once per instance and shared by the checks.
struct Analysis {
  const PartialAction& a;
  int p;
  InducedAction r;
  SkewRing s;
  std::vector<Mask> invariant;  // invariant subsets of the point set

  std::optional<IdealLattice> lattice;  // absent when over the cap
  std::string cap_reason;

  // Per invariant subset u: the quotient ring by the ideal supported on u
  // and its lattice (when feasible).
  struct Quotient {
    Mask u;
    SkewRing ring;
    std::optional<IdealLattice> lattice;
    bool max_commutative = false;
  };
  std::vector<Quotient> quotients;

  std::mt19937_64 rng;

  Analysis(const PartialAction& action, int prime, int dim_cap)
      : a(action),
        p(prime),
        r(induced_action(action, prime)),
        s(make_skew_ring(r)),
        invariant(invariant_subsets(action)),
        rng(std::stoull(fingerprint(action), nullptr, 16) ^ 0x5851f42d4c957f2dull) {
    try {
      lattice = all_ideals(s, dim_cap);
    } catch (const CapExceeded& e) {
      cap_reason = e.what();
    }
    for (Mask u : invariant) {
      Quotient q{u, make_quotient(s, u).quotient, std::nullopt, false};
      try {
        q.lattice = all_ideals(q.ring, dim_cap);
      } catch (const CapExceeded&) {
      }
      q.max_commutative = is_unit_subring_maximal_commutative(q.ring);
      quotients.push_back(std::move(q));
    }
  }

  Vec random_vec(int n) {
    Vec v = Vec::Zero(n);
    for (int i = 0; i < n; ++i) v(i) = static_cast<int>(rng() % static_cast<unsigned>(p));
    return v;
  }
};

std::string mask_str(const PartialAction& a, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int x : bits_of(m)) {
    if (!first) out += ",";
    out += a.point_ids[x];
    first = false;
  }
  return out + "}";
}

void dynamics_suite(Analysis& an, std::vector<CheckResult>& out) {
  const PartialAction& a = an.a;
  const int nx = a.num_points();

  // Orbit reachability is an equivalence relation.
  {
    bool ok = true;
    std::string witness;
    for (int x = 0; x < nx && ok; ++x) {
      if (!bit(orbit(a, x), x)) { ok = false; witness = "not reflexive at " + a.point_ids[x]; }
      for (int y : bits_of(orbit(a, x))) {
        if (!bit(orbit(a, y), x)) { ok = false; witness = "not symmetric"; break; }
        for (int z : bits_of(orbit(a, y)))
          if (!bit(orbit(a, x), z)) { ok = false; witness = "not transitive"; break; }
      }
    }
    out.push_back(check_bool("orbit_equivalence", ok, witness));
  }

  // The orbit-union enumeration agrees with the exhaustive subset scan.
  if (nx <= 4) {
    std::vector<Mask> brute;
    for (Mask m = 0; m < (Mask{1} << nx); ++m)
      if (is_invariant(a, m)) brute.push_back(m);
    std::sort(brute.begin(), brute.end(), [](Mask x, Mask y) {
      if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
      return x < y;
    });
    out.push_back(check_bool("invariant_subsets_are_orbit_unions", brute == an.invariant,
                             "orbit unions differ from the exhaustive scan"));
  } else {
    bool ok = true;
    for (Mask m : an.invariant) ok = ok && is_invariant(a, m);
    out.push_back(check_bool("invariant_subsets_are_orbit_unions", ok,
                             "an enumerated subset is not invariant"));
  }

  out.push_back(check_bool("minimal_iff_transitive",
                           is_minimal(a) == is_topologically_transitive(a), "sides differ"));

  if (is_global(a)) {
    const PartialAction back = from_fibred(to_fibred(a));
    out.push_back(check_bool("fibred_round_trip", fingerprint(back) == fingerprint(a),
                             "round trip changed the action"));
  } else {
    bool threw = false;
    try {
      (void)to_fibred(a);
    } catch (const ValidationError&) {
      threw = true;
    }
    out.push_back(check_bool("fibred_round_trip", threw,
                             "non-global action was accepted by the fibred conversion"));
  }

  // Nested restrictions compose.
  {
    bool ok = true;
    for (Mask m : an.invariant) {
      const PartialAction am = restrict_to(a, m);
      for (Mask inner : an.invariant) {
        if (!subset(inner, m)) continue;
        Mask inner_in_m = 0;
        for (int x : bits_of(inner)) inner_in_m = with_bit(inner_in_m, am.point_index(a.point_ids[x]));
        if (fingerprint(restrict_to(am, inner_in_m)) != fingerprint(restrict_to(a, inner))) {
          ok = false;
          break;
        }
      }
    }
    out.push_back(check_bool("restriction_composes", ok, "nested restrictions differ"));
  }
}

void ideal_suite(Analysis& an, const VerifierOptions& opts, std::vector<CheckResult>& out) {
  const PartialAction& a = an.a;
  const SkewRing& s = an.s;
  const int p = an.p;

  // Domain ideals absorb multiplication by the whole function algebra.
  {
    bool ok = true;
    for (int g = 0; g < a.g.num_morphisms() && ok; ++g)
      for (int x : bits_of(a.dom[g]))
        for (int y = 0; y < a.num_points(); ++y) {
          Vec prod = Vec::Zero(a.num_points());
          if (x == y) prod(x) = 1;  // pointwise product of two indicators
          if ((support_of(prod) & ~a.dom[g]) != 0) { ok = false; break; }
        }
    out.push_back(check_bool("domain_ideals_absorb", ok, "a domain ideal is not absorbing"));
  }

  // Subset/ideal dictionary on the function algebra.
  if (a.num_points() <= 4) {
    bool ok = true;
    std::string witness;
    for (Mask u = 0; u < (Mask{1} << a.num_points()) && ok; ++u) {
      const Subspace j = ideal_from_open(an.r, u);
      if (support_of_ideal(an.r, j) != u) { ok = false; witness = "support round trip"; }
      // ideal-level invariance must match subset-level invariance
      bool ideal_inv = true;
      for (int g = 0; g < a.g.num_morphisms() && ideal_inv; ++g) {
        const Mask dom_inv = a.dom[a.g.inv[g]] & u;
        for (int x : bits_of(dom_inv)) {
          const Vec img = an.r.apply(g, indicator(with_bit(0, x), a.num_points()));
          if (!subset(support_of(img), u)) ideal_inv = false;
        }
      }
      if (ideal_inv != is_invariant(a, u)) {
        ok = false;
        witness = "invariance mismatch at " + mask_str(a, u);
      }
    }
    out.push_back(check_bool("subset_ideal_dictionary", ok, witness));
  } else {
    out.push_back(check_skip("subset_ideal_dictionary", "exhaustive only for 4 points or fewer"));
  }

  // Modular law (I+J) ∩ (K+J) = (I∩K) + J for subset ideals, exhaustively.
  if (a.num_points() <= 4) {
    bool ok = true;
    const Mask top = a.all_points();
    for (Mask i = 0; i <= top && ok; ++i) {
      for (Mask j = 0; j <= top && ok; ++j)
        for (Mask k = 0; k <= top && ok; ++k) {
          const Subspace lhs =
              make_subspace(intersect_spaces(sum_spaces(ideal_from_open(an.r, i).basis,
                                                        ideal_from_open(an.r, j).basis, p),
                                             sum_spaces(ideal_from_open(an.r, k).basis,
                                                        ideal_from_open(an.r, j).basis, p),
                                             p),
                            a.num_points(), p);
          const Subspace rhs = make_subspace(
              sum_spaces(intersect_spaces(ideal_from_open(an.r, i).basis,
                                          ideal_from_open(an.r, k).basis, p),
                         ideal_from_open(an.r, j).basis, p),
              a.num_points(), p);
          if (!(lhs == rhs)) ok = false;
        }
      if (i == top) break;
    }
    out.push_back(check_bool("local_unit_modular_law", ok, "modular law fails on subset ideals"));
  } else {
    out.push_back(check_skip("local_unit_modular_law", "exhaustive only for 4 points or fewer"));
  }

  // Sampled modular law inside the skew ring with a graded (hence s-unital)
  // operand.
  if (s.dim() > 0) {
    bool ok = true;
    for (int trial = 0; trial < opts.sampled_ideal_triples && ok; ++trial) {
      const Mask u = an.invariant[an.rng() % an.invariant.size()];
      const Subspace i = graded_ideal_from_subset(s, u).space;
      const Subspace j = ideal_closure(s, an.random_vec(s.dim()));
      const Subspace k = ideal_closure(s, an.random_vec(s.dim()));
      const Subspace lhs = make_subspace(
          intersect_spaces(sum_spaces(i.basis, j.basis, p), sum_spaces(k.basis, j.basis, p), p),
          s.dim(), p);
      const Subspace rhs = make_subspace(
          sum_spaces(intersect_spaces(i.basis, k.basis, p), j.basis, p), s.dim(), p);
      if (!(lhs == rhs)) ok = false;
    }
    out.push_back(
        check_bool("local_unit_modular_law_sampled", ok, "modular law fails with graded operand"));
  }

  // Bimodule identities of the unit projection and expectation, sampled.
  {
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < opts.sampled_pairs && ok; ++trial) {
      const Vec f = an.random_vec(a.num_points());
      const Vec bcoords = an.random_vec(s.dim());
      const SkewElement b = from_dense(s, bcoords);
      const SkewElement av = unit_embedding(s, f);  // element of the unit subring

      // unit projection is multiplicative against the unit subring
      const Vec lhs1 = unit_projection(s, multiply(s, av, b));
      Vec rhs1 = Vec::Zero(a.num_points());
      {
        const Vec pa = unit_projection(s, av), pb = unit_projection(s, b);
        for (int x = 0; x < a.num_points(); ++x)
          rhs1(x) = mod_p(static_cast<long long>(pa(x)) * pb(x), p);
      }
      if (lhs1 != rhs1) { ok = false; witness = "projection not multiplicative on the left"; }
      const Vec lhs2 = unit_projection(s, multiply(s, b, av));
      Vec rhs2 = Vec::Zero(a.num_points());
      {
        const Vec pa = unit_projection(s, av), pb = unit_projection(s, b);
        for (int x = 0; x < a.num_points(); ++x)
          rhs2(x) = mod_p(static_cast<long long>(pb(x)) * pa(x), p);
      }
      if (ok && lhs2 != rhs2) { ok = false; witness = "projection not multiplicative on the right"; }

      // expectation is an A-A bimodule map fixing A
      if (ok && !(conditional_expectation(s, av) == av)) {
        ok = false;
        witness = "expectation does not fix the unit subring";
      }
      if (ok && !(conditional_expectation(s, multiply(s, av, b)) ==
                  multiply(s, av, conditional_expectation(s, b)))) {
        ok = false;
        witness = "expectation is not left A-linear";
      }
      if (ok && !(conditional_expectation(s, multiply(s, b, av)) ==
                  multiply(s, conditional_expectation(s, b), av))) {
        ok = false;
        witness = "expectation is not right A-linear";
      }
      // embed/project are mutually inverse on the function algebra
      if (ok && unit_projection(s, unit_embedding(s, f)) != f) {
        ok = false;
        witness = "projection does not invert the embedding";
      }
      // the unit subring is commutative
      if (ok) {
        const Vec f2 = an.random_vec(a.num_points());
        const SkewElement av2 = unit_embedding(s, f2);
        if (!(multiply(s, av, av2) == multiply(s, av2, av))) {
          ok = false;
          witness = "unit subring is not commutative";
        }
      }
    }
    out.push_back(check_bool("projection_bimodule_identities", ok, witness));
  }

  // Associativity and distributivity of the ring product on monomials.
  {
    bool ok = true;
    const int d = s.dim();
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j)
        for (int k = 0; k < d && ok; ++k) {
          const int ij = s.prod(i, j), jk = s.prod(j, k);
          const int l = ij < 0 ? -1 : s.prod(ij, k);
          const int r = jk < 0 ? -1 : s.prod(i, jk);
          if (l != r) ok = false;
        }
    out.push_back(check_bool("monomial_associativity", ok, "associativity fails on monomials"));
  }

  // Grading: homogeneous components multiply into the composite component.
  {
    bool ok = true;
    for (int i = 0; i < s.dim() && ok; ++i)
      for (int j = 0; j < s.dim(); ++j) {
        const int k = s.prod(i, j);
        if (k < 0) continue;
        const auto [gi, xi] = s.basis[i];
        const auto [gj, xj] = s.basis[j];
        if (!a.g.composable(gi, gj) || s.basis[k].first != a.g.comp(gi, gj)) {
          ok = false;
          break;
        }
      }
    out.push_back(check_bool("grading_multiplicative", ok, "component product escapes grading"));
  }

  // Dynamics vs coefficient algebra.
  out.push_back(check_bool("minimal_iff_coefficients_G_simple",
                           is_minimal(a) == is_G_simple(an.r), "sides differ"));
  out.push_back(check_bool("transitive_iff_coefficients_G_prime",
                           is_topologically_transitive(a) == is_G_prime(an.r), "sides differ"));
  out.push_back(check_bool("graded_simple_iff_G_simple",
                           is_graded_simple(s) == is_G_simple(an.r), "sides differ"));
  out.push_back(check_bool("graded_prime_iff_G_prime",
                           is_graded_prime(s) == is_G_prime(an.r), "sides differ"));

  // Freeness on a subset is maximal commutativity of its quotient ring.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t qi = 0; qi < an.invariant.size(); ++qi) {
      // quotient by the ideal of functions vanishing on F: restrict to F
      const Mask f = an.invariant[qi];
      const Mask complement = a.all_points() & ~f;
      const auto it = std::find_if(an.quotients.begin(), an.quotients.end(),
                                   [&](const auto& q) { return q.u == complement; });
      const bool free_side = is_topologically_free_on(a, f);
      const bool ring_side = it->max_commutative;
      if (free_side != ring_side) {
        ok = false;
        witness = "subset " + mask_str(a, f);
        break;
      }
    }
    out.push_back(check_bool("free_on_subset_iff_quotient_max_commutative", ok, witness));
  }

  if (!an.lattice) {
    for (const char* tag :
         {"graded_ideal_bijection", "unit_part_sandwich", "unit_component_membership",
          "max_commutative_iff_intersection", "graded_ideals_chain",
          "quotient_max_commutativity_chain", "simple_iff_G_simple_and_intersection",
          "prime_vs_G_prime"})
      out.push_back(check_skip(tag, an.cap_reason));
    return;
  }
  const IdealLattice& lat = *an.lattice;

  // Graded ideals correspond to invariant subsets, bijectively.
  {
    std::vector<std::string> graded_keys;
    for (const Ideal& i : lat.ideals)
      if (is_graded_ideal(s, i.space)) graded_keys.push_back(subspace_key(i.space));
    std::sort(graded_keys.begin(), graded_keys.end());

    std::vector<std::string> psi_keys;
    bool round_trips = true;
    for (Mask u : an.invariant) {
      const Ideal psi = graded_ideal_from_subset(s, u);
      psi_keys.push_back(subspace_key(psi.space));
      if (invariant_support_of_ideal(s, psi.space) != u) round_trips = false;
    }
    std::sort(psi_keys.begin(), psi_keys.end());
    bool onto = psi_keys == graded_keys;
    bool back = true;
    for (const Ideal& i : lat.ideals) {
      if (!is_graded_ideal(s, i.space)) continue;
      const Mask u = invariant_support_of_ideal(s, i.space);
      if (!is_invariant(a, u) || !(graded_ideal_from_subset(s, u).space == i.space)) back = false;
    }
    out.push_back(check_bool("graded_ideal_bijection", round_trips && onto && back,
                             onto ? "round trip failed" : "image differs from the graded ideals"));
  }

  // Sandwich: Psi(unit part) inside I inside Psi(projection), and the
  // two-sided closure of the diagonal part is exactly Psi(unit part).
  {
    bool ok = true;
    std::string witness;
    for (const Ideal& i : lat.ideals) {
      const Mask j0 = invariant_support_of_ideal(s, i.space);
      const Mask j = unit_projection_support(s, i.space);
      if (!is_invariant(a, j0) || !is_invariant(a, j)) {
        ok = false;
        witness = "projection support not invariant";
        break;
      }
      const Ideal psi_j0 = graded_ideal_from_subset(s, j0);
      const Ideal psi_j = graded_ideal_from_subset(s, j);
      if (!i.space.contains(psi_j0.space) || !psi_j.space.contains(i.space)) {
        ok = false;
        witness = "ideal escapes its sandwich";
        break;
      }
      // closure of the diagonal part
      const Mat inter = intersect_spaces(i.space.basis, unit_subring(s).basis, p);
      if (!(ideal_closure(s, inter) == psi_j0.space)) {
        ok = false;
        witness = "closure of the diagonal part is not the graded ideal of its support";
        break;
      }
    }
    out.push_back(check_bool("unit_part_sandwich", ok, witness));
  }

  // Unit components of diagonal elements stay in the ideal.
  {
    bool ok = true;
    for (const Ideal& i : lat.ideals) {
      const Mat inter = intersect_spaces(i.space.basis, unit_subring(s).basis, p);
      for (Eigen::Index row = 0; row < inter.rows() && ok; ++row) {
        const SkewElement e = from_dense(s, inter.row(row));
        for (const auto& [g, part] : e.comp) {
          SkewElement mono;
          mono.comp[g] = part;
          if (!i.space.contains(to_dense(s, mono))) ok = false;
        }
      }
      if (!ok) break;
    }
    out.push_back(check_bool("unit_component_membership", ok,
                             "a unit component left its ideal"));
  }

  const bool ip = has_intersection_property(s, lat);
  const bool max_comm = is_unit_subring_maximal_commutative(s);
  out.push_back(check_bool("max_commutative_iff_intersection", ip == max_comm, "sides differ"));

  // Residual chains: every-ideal-graded, bijectivity of the support map,
  // residual intersection property, and quotient maximal commutativity all
  // agree.
  bool lattice_complete_for_quotients = true;
  bool residual_ip = true;
  bool all_quotients_max_comm = true;
  for (const auto& q : an.quotients) {
    if (!q.lattice) {
      lattice_complete_for_quotients = false;
      break;
    }
    residual_ip = residual_ip && has_intersection_property(q.ring, *q.lattice);
    all_quotients_max_comm = all_quotients_max_comm && q.max_commutative;
  }

  bool all_graded = true;
  for (const Ideal& i : lat.ideals)
    if (!is_graded_ideal(s, i.space)) all_graded = false;

  // Bijectivity of the support correspondence on all ideals.
  bool phi_bijective = true;
  {
    std::vector<Mask> images;
    for (const Ideal& i : lat.ideals) {
      const Mask u = invariant_support_of_ideal(s, i.space);
      if (!is_invariant(a, u)) phi_bijective = false;
      images.push_back(u);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) phi_bijective = false;
    // onto: every invariant subset is hit
    for (Mask u : an.invariant)
      if (!std::binary_search(images.begin(), images.end(), u)) phi_bijective = false;
  }

  if (!lattice_complete_for_quotients) {
    out.push_back(check_skip("graded_ideals_chain", "a quotient exceeds the enumeration cap"));
    out.push_back(
        check_skip("quotient_max_commutativity_chain", "a quotient exceeds the enumeration cap"));
  } else {
    {
      const bool agree = all_graded == phi_bijective && phi_bijective == residual_ip;
      std::ostringstream w;
      w << "all_graded=" << all_graded << " support_map_bijective=" << phi_bijective
        << " residual_intersection=" << residual_ip;
      out.push_back(check_bool("graded_ideals_chain", agree, w.str()));
    }
    {
      const bool agree = all_quotients_max_comm == residual_ip && residual_ip == all_graded;
      std::ostringstream w;
      w << "quotient_max_commutative=" << all_quotients_max_comm
        << " residual_intersection=" << residual_ip << " all_graded=" << all_graded;
      out.push_back(check_bool("quotient_max_commutativity_chain", agree, w.str()));
    }
  }

  const bool simple = is_simple(lat);
  const bool prime = is_prime(s, lat);
  const bool g_simple = is_G_simple(an.r);
  const bool g_prime = is_G_prime(an.r);
  {
    std::ostringstream w;
    w << "simple=" << simple << " G_simple=" << g_simple << " intersection=" << ip;
    out.push_back(
        check_bool("simple_iff_G_simple_and_intersection", simple == (g_simple && ip), w.str()));
  }
  {
    bool ok = !prime || g_prime;                   // primeness passes to the coefficients
    if (ip && (prime != g_prime)) ok = false;      // and is equivalent under the intersection property
    std::ostringstream w;
    w << "prime=" << prime << " G_prime=" << g_prime << " intersection=" << ip;
    out.push_back(check_bool("prime_vs_G_prime", ok, w.str()));
  }
}

void steinberg_suite(Analysis& an, const VerifierOptions& opts, std::vector<CheckResult>& out) {
  const PartialAction& a = an.a;
  const TransGroupoid t = transformation_groupoid(a);

  for (auto& c : check_steinberg_iso(an.s, t)) out.push_back(std::move(c));
  for (auto& c : check_dynamics_correspondence(a)) out.push_back(std::move(c));

  // Convolution associativity on sampled triples.
  {
    bool ok = true;
    for (int trial = 0; trial < opts.sampled_triples && ok; ++trial) {
      Vec f1 = Vec::Zero(t.num_arrows()), f2 = f1, f3 = f1;
      for (int i = 0; i < t.num_arrows(); ++i) {
        f1(i) = static_cast<int>(an.rng() % static_cast<unsigned>(an.p));
        f2(i) = static_cast<int>(an.rng() % static_cast<unsigned>(an.p));
        f3(i) = static_cast<int>(an.rng() % static_cast<unsigned>(an.p));
      }
      const Vec lhs = convolve(t, convolve(t, f1, f2, an.p), f3, an.p);
      const Vec rhs = convolve(t, f1, convolve(t, f2, f3, an.p), an.p);
      if (lhs != rhs) ok = false;
    }
    out.push_back(check_bool("convolution_associativity", ok, "associativity fails"));
  }

  // Topological chains against ring and groupoid properties.
  const bool res_free = is_residually_topologically_free(a);
  const bool strongly_eff = is_strongly_effective(t);
  const bool top_free = is_topologically_free(a);
  const bool effective = is_effective(t);
  const bool max_comm = is_unit_subring_maximal_commutative(an.s);
  bool all_quotients_max_comm = true;
  for (const auto& q : an.quotients)
    all_quotients_max_comm = all_quotients_max_comm && q.max_commutative;

  if (an.lattice) {
    bool residual_ip = true;
    bool quotient_caps = false;
    for (const auto& q : an.quotients) {
      if (!q.lattice) { quotient_caps = true; break; }
      residual_ip = residual_ip && has_intersection_property(q.ring, *q.lattice);
    }
    bool all_graded = true;
    for (const Ideal& i : an.lattice->ideals)
      if (!is_graded_ideal(an.s, i.space)) all_graded = false;

    if (quotient_caps) {
      out.push_back(check_skip("residual_freeness_chain", "a quotient exceeds the cap"));
    } else {
      const bool agree = res_free == all_quotients_max_comm &&
                         all_quotients_max_comm == residual_ip && residual_ip == all_graded &&
                         all_graded == strongly_eff;
      std::ostringstream w;
      w << "residually_free=" << res_free << " quotient_max_comm=" << all_quotients_max_comm
        << " residual_intersection=" << residual_ip << " all_graded=" << all_graded
        << " strongly_effective=" << strongly_eff;
      out.push_back(check_bool("residual_freeness_chain", agree, w.str()));
    }

    const bool ip = has_intersection_property(an.s, *an.lattice);
    {
      const bool agree = top_free == max_comm && max_comm == ip && ip == effective;
      std::ostringstream w;
      w << "free=" << top_free << " max_comm=" << max_comm << " intersection=" << ip
        << " effective=" << effective;
      out.push_back(check_bool("freeness_chain", agree, w.str()));
    }

    const bool minimal = is_minimal(a);
    const bool transitive = is_topologically_transitive(a);
    const bool simple = is_simple(*an.lattice);
    const bool prime = is_prime(an.s, *an.lattice);
    {
      std::ostringstream w;
      w << "minimal=" << minimal << " free=" << top_free << " simple=" << simple;
      out.push_back(
          check_bool("minimal_free_iff_simple", (minimal && top_free) == simple, w.str()));
    }
    out.push_back(check_bool("prime_implies_transitive", !prime || transitive,
                             "prime ring over a non-transitive action"));
    out.push_back(check_bool("free_transitive_implies_prime", !(top_free && transitive) || prime,
                             "free transitive action with a non-prime ring"));
  } else {
    for (const char* tag :
         {"residual_freeness_chain", "freeness_chain", "minimal_free_iff_simple",
          "prime_implies_transitive", "free_transitive_implies_prime"})
      out.push_back(check_skip(tag, an.cap_reason));
    // The chain parts that avoid the lattice are still assertable.
    out.push_back(check_bool("free_iff_max_commutative", top_free == max_comm, "sides differ"));
    out.push_back(check_bool("residually_free_iff_quotient_max_commutative",
                             res_free == all_quotients_max_comm, "sides differ"));
  }
}

void stone_suite(Analysis& an, std::vector<CheckResult>& out) {
  for (auto& c : check_stone_round_trip(an.a, an.p)) out.push_back(std::move(c));
}

} // namespace

VerificationReport run_action_suites(const PartialAction& a, int p, SuiteSelection suites,
                                     const VerifierOptions& opts) {
  VerificationReport rep;
  rep.fingerprint = fingerprint(a);
  const int cap = opts.dim_cap > 0 ? opts.dim_cap : effective_dim_cap(p);
  Analysis an(a, p, cap);

  if (suites.dynamics) dynamics_suite(an, rep.checks);
  if (suites.ideal) ideal_suite(an, opts, rep.checks);
  if (suites.steinberg) steinberg_suite(an, opts, rep.checks);
  if (suites.stone) stone_suite(an, rep.checks);

  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& x, const CheckResult& y) { return x.tag < y.tag; });
  return rep;
}

VerificationReport run_ultragraph_suite(const Ultragraph& u, int max_len) {
  VerificationReport rep;
  {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& id : u.edge_ids)
      for (unsigned char c : id) { h ^= c; h *= 1099511628211ull; }
    for (int e = 0; e < u.num_edges(); ++e) {
      h ^= static_cast<std::uint64_t>(u.esrc[e]);
      h *= 1099511628211ull;
      h ^= u.erange[e];
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    rep.fingerprint = buf;
  }

  const KrReport kr = check_kr(u, max_len);
  std::ostringstream w;
  w << "condition_k=" << kr.condition_k << " bounded_recurrent=" << kr.bounded_recurrent;
  for (const auto& vr : kr.per_vertex)
    if (vr.transitory_loop)
      w << " transitory_at=" << u.vertex_ids[static_cast<std::size_t>(vr.vertex)];
  rep.checks.push_back(
      check_bool("condition_k_iff_bounded_recurrence", kr.consistent, w.str()));
  return rep;
}

} // namespace sga
