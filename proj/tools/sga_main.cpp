// sga: command-line interface for finite groupoid partial actions, their
// skew rings, transformation groupoids, and ultragraphs.

#include "CLI11.hpp"
#include "json.hpp"

#include "sga/corpus.hpp"
#include "sga/errors.hpp"
#include "sga/fn_algebra.hpp"
#include "sga/ideal_lattice.hpp"
#include "sga/instance_io.hpp"
#include "sga/skew_ring.hpp"
#include "sga/stone_dual.hpp"
#include "sga/trans_groupoid.hpp"
#include "sga/ultragraph.hpp"
#include "sga/verifier.hpp"

#include <fstream>
#include <iostream>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw sga::ValidationError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

json action_report(const sga::PartialAction& a, int p, int dim_cap) {
  json j;
  j["kind"] = "action";
  j["points"] = a.num_points();
  j["morphisms"] = a.g.num_morphisms();
  j["global"] = sga::is_global(a);
  j["minimal"] = sga::is_minimal(a);
  j["topologically_transitive"] = sga::is_topologically_transitive(a);
  j["topologically_free"] = sga::is_topologically_free(a);
  j["residually_topologically_free"] = sga::is_residually_topologically_free(a);
  {
    json inv = json::array();
    for (sga::Mask m : sga::invariant_subsets(a)) {
      json sub = json::array();
      for (int x : sga::bits_of(m)) sub.push_back(a.point_ids[x]);
      inv.push_back(sub);
    }
    j["invariant_subsets"] = inv;
  }

  const sga::InducedAction r = sga::induced_action(a, p);
  j["field"] = p;
  j["G_simple"] = sga::is_G_simple(r);
  j["G_prime"] = sga::is_G_prime(r);

  const sga::SkewRing s = sga::make_skew_ring(r);
  j["skew_dimension"] = s.dim();
  j["graded_simple"] = sga::is_graded_simple(s);
  j["graded_prime"] = sga::is_graded_prime(s);
  j["maximal_commutative"] = sga::is_unit_subring_maximal_commutative(s);

  json skipped = json::array();
  try {
    const sga::IdealLattice lat = sga::all_ideals(s, dim_cap);
    j["ideal_count"] = lat.size();
    int graded = 0;
    for (const auto& i : lat.ideals) graded += sga::is_graded_ideal(s, i.space);
    j["graded_ideal_count"] = graded;
    j["simple"] = sga::is_simple(lat);
    j["prime"] = sga::is_prime(s, lat);
    j["intersection_property"] = sga::has_intersection_property(s, lat);
    j["residual_intersection_property"] = sga::has_residual_intersection_property(s, dim_cap);
  } catch (const sga::CapExceeded& e) {
    for (const char* k : {"ideal_count", "graded_ideal_count", "simple", "prime",
                          "intersection_property", "residual_intersection_property"}) {
      j[k] = nullptr;
      skipped.push_back(k);
    }
    j["cap_note"] = e.what();
  }
  j["skipped"] = skipped;

  const sga::TransGroupoid t = sga::transformation_groupoid(a);
  json tg;
  tg["arrows"] = t.num_arrows();
  tg["units"] = t.g.num_objects();
  tg["effective"] = sga::is_effective(t);
  tg["strongly_effective"] = sga::is_strongly_effective(t);
  tg["minimal"] = sga::is_minimal_groupoid(t);
  tg["topologically_transitive"] = sga::is_topologically_transitive_groupoid(t);
  j["transformation_groupoid"] = tg;
  return j;
}

json groupoid_report(const sga::Groupoid& g) {
  json j;
  j["kind"] = "groupoid";
  j["objects"] = g.num_objects();
  j["morphisms"] = g.num_morphisms();
  j["composable_pairs"] = sga::composable_pairs(g).size();
  json iso;
  for (int e = 0; e < g.num_objects(); ++e)
    iso[g.object_ids[e]] = sga::isotropy_group(g, e).size();
  j["isotropy_orders"] = iso;
  return j;
}

json ultragraph_report(const sga::Ultragraph& u, int max_len) {
  json j;
  j["kind"] = "ultragraph";
  j["vertices"] = u.num_vertices();
  j["edges"] = u.num_edges();
  const sga::ConditionKReport k = sga::condition_k(u);
  j["condition_K"] = k.holds;
  json per;
  for (int v = 0; v < u.num_vertices(); ++v)
    per[u.vertex_ids[v]] = sga::to_string(k.per_vertex[static_cast<std::size_t>(v)]);
  j["simple_loops"] = per;
  const sga::KrReport kr = sga::check_kr(u, max_len);
  j["bounded_recurrence"] = kr.bounded_recurrent;
  j["recurrence_consistent"] = kr.consistent;
  j["generalized_vertices"] = sga::generalized_vertices(u).size();
  j["accommodating_family"] = sga::accommodating_family(u).size();
  return j;
}

json report_to_json(const sga::VerificationReport& rep, bool timings) {
  json j;
  j["fingerprint"] = rep.fingerprint;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj;
    cj["tag"] = c.tag;
    cj["status"] = sga::to_string(c.status);
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (timings) cj["ms"] = c.ms;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["failures"] = rep.failures();
  j["skipped"] = rep.skipped();
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "text") {
    // flat text rendering, one line per top-level key
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  } else {
    std::cout << sga::dump_canonical(j);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid partial actions, skew rings, and ultragraphs"};
  app.require_subcommand(1);

  std::string path, format = "json";
  int field = 2;
  int max_dim = 0;
  int max_loop_len = 0;
  bool timings = false;

  auto* validate_cmd = app.add_subcommand("validate", "check an instance file against its axioms");
  validate_cmd->add_option("file", path)->required();

  auto* report_cmd = app.add_subcommand("report", "full property dossier for an instance");
  report_cmd->add_option("file", path)->required();
  report_cmd->add_option("--field", field, "prime field modulus");
  report_cmd->add_option("--max-dim", max_dim, "ideal enumeration cap override");
  report_cmd->add_option("--max-loop-len", max_loop_len, "loop search bound for ultragraphs");
  report_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* ideals_cmd = app.add_subcommand("ideals", "enumerate the two-sided ideal lattice");
  ideals_cmd->add_option("file", path)->required();
  ideals_cmd->add_option("--field", field, "prime field modulus");
  ideals_cmd->add_option("--max-dim", max_dim, "ideal enumeration cap override");
  ideals_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string suite = "all";
  auto* theorems_cmd = app.add_subcommand("theorems", "run the verification suites");
  theorems_cmd->add_option("file", path)->required();
  theorems_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "dynamics", "ideal", "steinberg", "stone", "ultragraph"}));
  theorems_cmd->add_option("--field", field, "prime field modulus");
  theorems_cmd->add_option("--max-dim", max_dim, "ideal enumeration cap override");
  theorems_cmd->add_option("--max-loop-len", max_loop_len, "loop search bound for ultragraphs");
  theorems_cmd->add_flag("--timings", timings, "include wall times (non-reproducible)");
  theorems_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string ucheck = "k";
  auto* ultra_cmd = app.add_subcommand("ultragraph", "ultragraph loop analysis");
  ultra_cmd->add_option("file", path)->required();
  ultra_cmd->add_option("--check", ucheck)->check(CLI::IsMember({"k", "recurrent"}));
  ultra_cmd->add_option("--max-loop-len", max_loop_len, "loop search bound");
  ultra_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string kind = "action";
  std::uint64_t seed = 0;
  int points = 3, morphisms = 4, vertices = 4, edges = 6;
  auto* gen_cmd = app.add_subcommand("gen", "emit a deterministic random instance");
  gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"groupoid", "action", "ultragraph"}));
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--points", points);
  gen_cmd->add_option("--morphisms", morphisms);
  gen_cmd->add_option("--vertices", vertices);
  gen_cmd->add_option("--edges", edges);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitIo;
  }

  try {
    if (gen_cmd->parsed()) {
      if (kind == "action") {
        sga::ActionBounds bounds;
        bounds.max_points = points;
        bounds.max_morphisms = morphisms;
        const sga::PartialAction a = sga::random_instance(seed, bounds);
        std::cout << sga::dump_canonical(sga::to_json(a));
      } else if (kind == "groupoid") {
        sga::ActionBounds bounds;
        bounds.max_points = 1;
        bounds.max_morphisms = morphisms;
        const sga::PartialAction a = sga::random_instance(seed, bounds);
        std::cout << sga::dump_canonical(sga::to_json(a.g));
      } else {
        const sga::Ultragraph u = sga::random_ultragraph(seed, vertices, edges);
        std::cout << sga::dump_canonical(sga::to_json(u));
      }
      return kExitOk;
    }

    const json input = load_file(path);

    if (validate_cmd->parsed()) {
      try {
        const sga::Instance inst = sga::parse_instance(input);
        json j;
        j["kind"] = sga::instance_kind(inst);
        j["valid"] = true;
        emit(j, format);
        return kExitOk;
      } catch (const sga::ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kExitDomain;
      }
    }

    const sga::Instance inst = sga::parse_instance(input);
    const int cap = max_dim > 0 ? max_dim : sga::effective_dim_cap(field);

    if (report_cmd->parsed()) {
      json j;
      if (const auto* a = std::get_if<sga::PartialAction>(&inst)) j = action_report(*a, field, cap);
      else if (const auto* g = std::get_if<sga::Groupoid>(&inst)) j = groupoid_report(*g);
      else {
        const auto& u = std::get<sga::Ultragraph>(inst);
        const int bound = max_loop_len > 0 ? max_loop_len : 12;
        j = ultragraph_report(u, bound);
      }
      emit(j, format);
      return kExitOk;
    }

    if (ideals_cmd->parsed()) {
      const auto* a = std::get_if<sga::PartialAction>(&inst);
      if (!a) throw sga::ValidationError("the ideals command needs an action instance");
      const sga::SkewRing s = sga::make_skew_ring(*a, field);
      const sga::IdealLattice lat = sga::all_ideals(s, cap);
      json j;
      j["field"] = field;
      j["skew_dimension"] = s.dim();
      json list = json::array();
      for (const auto& ideal : lat.ideals) {
        json ij;
        ij["dimension"] = ideal.dim();
        ij["graded"] = sga::is_graded_ideal(s, ideal.space);
        json supp = json::array();
        for (int x : sga::bits_of(sga::invariant_support_of_ideal(s, ideal.space)))
          supp.push_back(a->point_ids[x]);
        ij["support"] = supp;
        json basis = json::array();
        for (Eigen::Index r = 0; r < ideal.space.basis.rows(); ++r) {
          const sga::SkewElement e = sga::from_dense(s, ideal.space.basis.row(r));
          json ej;
          for (const auto& [g, part] : e.comp) {
            json coeffs;
            for (int x = 0; x < a->num_points(); ++x)
              if (part(x) != 0) coeffs[a->point_ids[x]] = part(x);
            ej[a->g.morphism_ids[g]] = coeffs;
          }
          basis.push_back(ej);
        }
        ij["basis"] = basis;
        list.push_back(ij);
      }
      j["ideals"] = list;
      emit(j, format);
      return kExitOk;
    }

    if (theorems_cmd->parsed()) {
      sga::VerificationReport rep;
      if (const auto* u = std::get_if<sga::Ultragraph>(&inst)) {
        const int bound = max_loop_len > 0 ? max_loop_len : 12;
        rep = sga::run_ultragraph_suite(*u, bound);
      } else if (const auto* a = std::get_if<sga::PartialAction>(&inst)) {
        sga::VerifierOptions opts;
        opts.dim_cap = cap;
        rep = sga::run_action_suites(*a, field, sga::SuiteSelection::parse(suite), opts);
      } else {
        throw sga::ValidationError("the theorems command needs an action or ultragraph instance");
      }
      emit(report_to_json(rep, timings), format);
      return rep.all_ok() ? kExitOk : kExitDomain;
    }

    if (ultra_cmd->parsed()) {
      const auto* u = std::get_if<sga::Ultragraph>(&inst);
      if (!u) throw sga::ValidationError("not an ultragraph instance");
      const int bound = max_loop_len > 0 ? max_loop_len : 12;
      json j;
      if (ucheck == "k") {
        const sga::ConditionKReport k = sga::condition_k(*u);
        j["condition_K"] = k.holds;
        json per;
        for (int v = 0; v < u->num_vertices(); ++v)
          per[u->vertex_ids[v]] = sga::to_string(k.per_vertex[static_cast<std::size_t>(v)]);
        j["simple_loops"] = per;
      } else {
        const sga::KrReport kr = sga::check_kr(*u, bound);
        j["condition_K"] = kr.condition_k;
        j["bounded_recurrent"] = kr.bounded_recurrent;
        j["consistent"] = kr.consistent;
        json per = json::array();
        for (const auto& vr : kr.per_vertex) {
          json vj;
          vj["vertex"] = u->vertex_ids[static_cast<std::size_t>(vr.vertex)];
          vj["simple_loops"] = sga::to_string(vr.simple_loops);
          vj["has_loop_within_bound"] = vr.has_loop_within_bound;
          vj["all_bounded_loops_recurrent"] = vr.all_bounded_loops_recurrent;
          if (vr.transitory_loop) {
            json loop = json::array();
            for (int e : *vr.transitory_loop) loop.push_back(u->edge_ids[static_cast<std::size_t>(e)]);
            vj["transitory_loop"] = loop;
          }
          per.push_back(vj);
        }
        j["vertices"] = per;
      }
      emit(j, format);
      return kExitOk;
    }
  } catch (const sga::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitDomain;
  } catch (const sga::ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
